//! Write the three CSV data sets: measure curvatures, ratio functions with
//! slopes, and the gap functions. Plot with any external tool.

use meanineq::plot::PlotTarget;
use meanineq::sampling::GridSpec;
use std::fs::File;
use std::io::BufWriter;

fn main() -> std::io::Result<()> {
    let grid = GridSpec::new(2_000, 1e-6, 1e6);
    for (target, name) in [
        (PlotTarget::Curvatures, "f2.csv"),
        (PlotTarget::Ratios, "ratios.csv"),
        (PlotTarget::TFunctions, "tfuncs.csv"),
    ] {
        let mut w = BufWriter::new(File::create(name)?);
        target.write(&mut w, &grid)?;
        println!("wrote {name}");
    }
    Ok(())
}

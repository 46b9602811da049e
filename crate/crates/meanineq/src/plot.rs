//! CSV export of the curves behind the verification: measure curvatures,
//! ratio functions with their finite-difference slopes, and the four
//! auxiliary gap functions.
//!
//! Output is RFC 4180 style: comma separated, CRLF line endings, one header
//! row, values at full binary64 precision (17 significant digits).

use crate::claims::eval::eval_expr;
use crate::claims::parse_expr;
use crate::constants::{constant_claims, ratio_g};
use crate::genfn::{convexity_pairs, gen_derivatives};
use crate::means::PositivePair;
use crate::sampling::GridSpec;
use std::io::{self, Write};

/// The four auxiliary gap expressions, in display order.
pub const T_FUNCTIONS: [(&str, &str); 4] = [
    ("t1", "5/3*(A-G) - (S-L)"),
    ("t2", "(5*A+7*L)/12 - (2*N2+3*L)/5"),
    ("t3", "(S+5*L)/6 - (2*N2+3*L)/5"),
    ("t4", "N2 - (5*N3+L)/6"),
];

fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_row(w: &mut impl Write, cells: &[String]) -> io::Result<()> {
    w.write_all(cells.join(",").as_bytes())?;
    w.write_all(b"\r\n")
}

/// Curvature `f''` of each registered measure along the grid.
pub fn write_curvatures(w: &mut impl Write, grid: &GridSpec) -> io::Result<()> {
    let pairs = convexity_pairs();
    let mut header = vec!["x".to_string()];
    header.extend(pairs.iter().map(|p| format!("f2_{}", p.label())));
    write_row(w, &header)?;
    for x in grid.log_points() {
        let mut row = vec![num(x)];
        row.extend(pairs.iter().map(|&p| num(gen_derivatives(p, x).f2)));
        write_row(w, &row)?;
    }
    Ok(())
}

/// Ratio functions `g` of the five chained constant claims, each with a
/// central-difference slope estimate.
pub fn write_ratios(w: &mut impl Write, grid: &GridSpec) -> io::Result<()> {
    let claims: Vec<_> = constant_claims()[..5]
        .iter()
        .map(|c| (c.numerator_pair(), c.denominator_pair()))
        .collect();
    let mut header = vec!["x".to_string()];
    for (n, d) in &claims {
        header.push(format!("g_{}_{}", n.label(), d.label()));
        header.push(format!("fd_dg_{}_{}", n.label(), d.label()));
    }
    write_row(w, &header)?;
    for x in grid.log_points() {
        let mut row = vec![num(x)];
        for &(n, d) in &claims {
            let g = ratio_g(n, d, x).unwrap_or(f64::NAN);
            let h = x * 1e-6;
            let up = ratio_g(n, d, x + h).unwrap_or(f64::NAN);
            let dn = ratio_g(n, d, x - h).unwrap_or(f64::NAN);
            row.push(num(g));
            row.push(num((up - dn) / (2.0 * h)));
        }
        write_row(w, &row)?;
    }
    Ok(())
}

/// The gap functions T1..T4 evaluated along (1, x).
pub fn write_t_functions(w: &mut impl Write, grid: &GridSpec) -> io::Result<()> {
    let exprs: Vec<_> = T_FUNCTIONS
        .iter()
        .map(|(_, text)| parse_expr(text).expect("builtin expression"))
        .collect();
    let mut header = vec!["x".to_string()];
    header.extend(T_FUNCTIONS.iter().map(|(name, _)| name.to_string()));
    write_row(w, &header)?;
    for x in grid.log_points() {
        let p = PositivePair::new(1.0, x).expect("grid point");
        let mut row = vec![num(x)];
        for e in &exprs {
            row.push(num(eval_expr(e, p).unwrap_or(f64::NAN)));
        }
        write_row(w, &row)?;
    }
    Ok(())
}

/// Plot-data targets exposed by the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotTarget {
    Curvatures,
    Ratios,
    TFunctions,
}

impl PlotTarget {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "f2" | "curvatures" => Some(PlotTarget::Curvatures),
            "ratios" => Some(PlotTarget::Ratios),
            "t" | "tfuncs" => Some(PlotTarget::TFunctions),
            _ => None,
        }
    }

    pub fn write(&self, w: &mut impl Write, grid: &GridSpec) -> io::Result<()> {
        match self {
            PlotTarget::Curvatures => write_curvatures(w, grid),
            PlotTarget::Ratios => write_ratios(w, grid),
            PlotTarget::TFunctions => write_t_functions(w, grid),
        }
    }
}

//! Recursive-descent parser for the claim grammar.
//!
//! ```text
//! chain   := expr (("<=" | ">=") expr)+
//! expr    := term (("+" | "-") term)*
//! term    := factor (("*" | "/") factor)*
//! factor  := primary ("^" integer)*
//! primary := integer | "-" integer | symbol | "sqrt(" expr ")" | "(" expr ")"
//! symbol  := "H" | "G" | "L" | "N1" | "N2" | "N3" | "A" | "S"
//!          | "B[" rational "]" | "DP[" rational "]"
//! ```
//!
//! Whitespace is insignificant. Rationals inside brackets may be signed and
//! carry a `/`; a bare slash elsewhere is division.

use super::ast::{Claim, CmpOp, Expr, MeanSymbol};
use crate::means::ChainMean;
use crate::rational::Rational;
use std::fmt;

/// Syntax or symbol error with a byte position into the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Integer(i64),
    Ident(String),
    Le,
    Ge,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Eof,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Integer(v) => write!(f, "`{v}`"),
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Le => write!(f, "`<=`"),
            Token::Ge => write!(f, "`>=`"),
            Token::Plus => write!(f, "`+`"),
            Token::Minus => write!(f, "`-`"),
            Token::Star => write!(f, "`*`"),
            Token::Slash => write!(f, "`/`"),
            Token::Caret => write!(f, "`^`"),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
            Token::LBracket => write!(f, "`[`"),
            Token::RBracket => write!(f, "`]`"),
            Token::Eof => write!(f, "end of input"),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                tokens.push((Token::Plus, i));
                i += 1;
            }
            '-' => {
                tokens.push((Token::Minus, i));
                i += 1;
            }
            '*' => {
                tokens.push((Token::Star, i));
                i += 1;
            }
            '/' => {
                tokens.push((Token::Slash, i));
                i += 1;
            }
            '^' => {
                tokens.push((Token::Caret, i));
                i += 1;
            }
            '(' => {
                tokens.push((Token::LParen, i));
                i += 1;
            }
            ')' => {
                tokens.push((Token::RParen, i));
                i += 1;
            }
            '[' => {
                tokens.push((Token::LBracket, i));
                i += 1;
            }
            ']' => {
                tokens.push((Token::RBracket, i));
                i += 1;
            }
            '<' | '>' => {
                if i + 1 >= bytes.len() || bytes[i + 1] as char != '=' {
                    return Err(ParseError::new(
                        i,
                        format!("expected `{c}=`; strict comparisons are not part of the grammar"),
                    ));
                }
                tokens.push((if c == '<' { Token::Le } else { Token::Ge }, i));
                i += 2;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let value: i64 = text.parse().map_err(|_| {
                    ParseError::new(start, format!("integer `{text}` out of range"))
                })?;
                tokens.push((Token::Integer(value), start));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric()) {
                    i += 1;
                }
                tokens.push((Token::Ident(input[start..i].to_string()), start));
            }
            '.' => {
                return Err(ParseError::new(
                    i,
                    "decimal literals are not supported; use an exact fraction like 5/2",
                ));
            }
            other => {
                return Err(ParseError::new(
                    i,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    tokens.push((Token::Eof, input.len()));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn here(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::new(
                self.here(),
                format!("expected {want}, found {}", self.peek()),
            ))
        }
    }

    fn chain(&mut self) -> Result<Claim, ParseError> {
        let head = self.expr()?;
        let mut links = Vec::new();
        loop {
            let op = match self.peek() {
                Token::Le => CmpOp::Le,
                Token::Ge => CmpOp::Ge,
                _ => break,
            };
            self.bump();
            links.push((op, self.expr()?));
        }
        if links.is_empty() {
            return Err(ParseError::new(
                self.here(),
                "a claim needs at least two expressions joined by <= or >=",
            ));
        }
        Ok(Claim { head, links })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Token::Star => {
                    self.bump();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Token::Slash => {
                    self.bump();
                    let rhs = self.factor()?;
                    // A quotient of literals is an exact rational literal;
                    // folding here keeps `5/2` one AST node, so printing and
                    // reparsing are inverse operations.
                    acc = match (acc, rhs) {
                        (Expr::Number(a), Expr::Number(b)) => match a.checked_div(&b) {
                            Some(q) => Expr::Number(q),
                            None => Expr::Div(Box::new(Expr::Number(a)), Box::new(Expr::Number(b))),
                        },
                        (l, r) => Expr::Div(Box::new(l), Box::new(r)),
                    };
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.primary()?;
        while *self.peek() == Token::Caret {
            self.bump();
            let exponent = self.signed_integer("integer exponent")?;
            let exponent = i32::try_from(exponent)
                .map_err(|_| ParseError::new(self.here(), "exponent out of range"))?;
            acc = Expr::Pow(Box::new(acc), exponent);
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let pos = self.here();
        match self.bump() {
            Token::Integer(v) => Ok(Expr::Number(Rational::from_int(v))),
            Token::Minus => match self.bump() {
                Token::Integer(v) => Ok(Expr::Number(Rational::from_int(-v))),
                other => Err(ParseError::new(
                    pos,
                    format!("`-` may only prefix a numeric literal here, found {other}"),
                )),
            },
            Token::LParen => {
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Token::Ident(name) => self.symbol_or_call(&name, pos),
            other => Err(ParseError::new(
                pos,
                format!("expected a value, found {other}"),
            )),
        }
    }

    fn symbol_or_call(&mut self, name: &str, pos: usize) -> Result<Expr, ParseError> {
        match name {
            "sqrt" => {
                self.expect(Token::LParen)?;
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(Expr::Sqrt(Box::new(inner)))
            }
            "H" => Ok(Expr::Mean(MeanSymbol::Chain(ChainMean::H))),
            "G" => Ok(Expr::Mean(MeanSymbol::Chain(ChainMean::G))),
            "L" => Ok(Expr::Mean(MeanSymbol::Chain(ChainMean::L))),
            "N1" => Ok(Expr::Mean(MeanSymbol::Chain(ChainMean::N1))),
            "N2" => Ok(Expr::Mean(MeanSymbol::Chain(ChainMean::N2))),
            "N3" => Ok(Expr::Mean(MeanSymbol::Chain(ChainMean::N3))),
            "A" => Ok(Expr::Mean(MeanSymbol::Chain(ChainMean::A))),
            "S" => Ok(Expr::Mean(MeanSymbol::Chain(ChainMean::S))),
            "B" => {
                let t = self.bracket_rational("B")?;
                Ok(Expr::Mean(MeanSymbol::Power(t)))
            }
            "DP" => {
                let r = self.bracket_rational("DP")?;
                if r.to_f64() <= 0.0 || r.to_f64() >= 1.0 {
                    return Err(ParseError::new(
                        pos,
                        format!("DP parameter {r} must lie strictly between 0 and 1"),
                    ));
                }
                Ok(Expr::Mean(MeanSymbol::DragomirPearce(r)))
            }
            unknown => Err(ParseError::new(pos, format!("unknown symbol `{unknown}`"))),
        }
    }

    /// `[ rational ]` after B or DP.
    fn bracket_rational(&mut self, who: &str) -> Result<Rational, ParseError> {
        let pos = self.here();
        self.expect(Token::LBracket).map_err(|_| {
            ParseError::new(
                pos,
                format!("{who} needs a bracketed parameter, e.g. {who}[1/2]"),
            )
        })?;
        let num = self.signed_integer("numerator")?;
        let value = if *self.peek() == Token::Slash {
            self.bump();
            let den = self.signed_integer("denominator")?;
            if den == 0 {
                return Err(ParseError::new(self.here(), "zero denominator"));
            }
            Rational::new(num, den)
        } else {
            Rational::from_int(num)
        };
        self.expect(Token::RBracket)?;
        Ok(value)
    }

    fn signed_integer(&mut self, what: &str) -> Result<i64, ParseError> {
        let pos = self.here();
        match self.bump() {
            Token::Integer(v) => Ok(v),
            Token::Minus => match self.bump() {
                Token::Integer(v) => Ok(-v),
                other => Err(ParseError::new(
                    pos,
                    format!("expected {what}, found {other}"),
                )),
            },
            other => Err(ParseError::new(
                pos,
                format!("expected {what}, found {other}"),
            )),
        }
    }
}

/// Parses a full inequality chain.
pub fn parse_claim(input: &str) -> Result<Claim, ParseError> {
    let mut p = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let claim = p.chain()?;
    p.expect(Token::Eof)?;
    Ok(claim)
}

/// Parses a single expression (no comparison), e.g. for sign scans.
pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let expr = p.expr()?;
    p.expect(Token::Eof)?;
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_arity() {
        let c = parse_claim("H <= G <= L <= N1").unwrap();
        assert_eq!(c.arity(), 4);
    }

    #[test]
    fn nested_expression_parses() {
        let c = parse_claim("(A+H)/2 <= sqrt((A^2+H^2)/2)").unwrap();
        assert_eq!(c.arity(), 2);
        assert_eq!(c.to_string(), "(A + H)/2 <= sqrt((A^2 + H^2)/2)");
    }

    #[test]
    fn linear_combination_parses() {
        let c = parse_claim("N1 <= (5*N2 + L)/6").unwrap();
        assert_eq!(c.to_string(), "N1 <= (5*N2 + L)/6");
    }

    #[test]
    fn unknown_symbol_is_an_error() {
        let err = parse_claim("Q <= A").unwrap_err();
        assert!(err.message.contains("unknown symbol `Q`"), "{err}");
        assert_eq!(err.position, 0);
    }

    #[test]
    fn malformed_parameters_are_errors() {
        assert!(parse_claim("B <= A").is_err());
        assert!(parse_claim("B[ <= A").is_err());
        assert!(parse_claim("DP[3/2] <= A").is_err());
        assert!(parse_claim("DP[0] <= A").is_err());
        assert!(parse_claim("B[1/0] <= A").is_err());
    }

    #[test]
    fn single_expression_is_not_a_claim() {
        assert!(parse_claim("A + H").is_err());
        assert!(parse_expr("A + H").is_ok());
    }

    #[test]
    fn strict_comparison_is_rejected() {
        let err = parse_claim("A < S").unwrap_err();
        assert!(err.message.contains("strict"), "{err}");
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a = parse_claim("H<=G<=N1").unwrap();
        let b = parse_claim("  H <= G\t<= N1 ").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bracket_parameters_round_trip() {
        let c = parse_claim("B[-1] <= B[0] <= B[1/2] <= B[2]").unwrap();
        assert_eq!(c.to_string(), "B[-1] <= B[0] <= B[1/2] <= B[2]");
    }

    #[test]
    fn pretty_print_reparses_to_the_same_tree() {
        for text in [
            "H <= 2*A*H/(A+H) <= G <= (2*H+S)/3",
            "S-L <= 5/2*(A-L) <= 5*(N3-L) <= 10*(N1-L)",
            "sqrt(N1) <= DP[1/2] <= sqrt(A)",
            "G <= (S+3*G)/4 <= N1 <= (S+8*N1)/9",
            "A^2 >= G^2",
            "3*(A-G)+H >= S",
            "(A+H)/2/A <= 1 + 0",
            "5 - -2 >= A - A",
        ] {
            let first = parse_claim(text).unwrap();
            let printed = first.to_string();
            let second = parse_claim(&printed).unwrap();
            assert_eq!(first, second, "{text} -> {printed}");
        }
    }
}

//! Ideal files, kernel and point syntax.
//!
//! ```text
//! # Example ideal
//! vars: x, y, z
//! field: Q p=2
//! 2*x+y-4
//! x+2*y+z-1
//! ```
//!
//! `field:` is either `Q p=<prime>` (p-adic valuation on ℚ) or `Q(t)` (t-adic
//! valuation on rational functions in `t`). Header lines come before the first
//! polynomial; `#` starts a comment.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;
use tropbase::arith::parse_rational;
use tropbase::poly::parse_polynomial;
use tropbase::{Field, PAdic, Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {msg}")]
pub struct InputError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl InputError {
    fn at(line: usize, col: usize, msg: impl Into<String>) -> Self {
        InputError { line, col, msg: msg.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldConfig {
    PAdic(BigInt),
    TAdic,
}

impl FieldConfig {
    pub fn parse(s: &str) -> Result<Self, String> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "Q(t)" {
            return Ok(FieldConfig::TAdic);
        }
        let p = compact
            .strip_prefix("Qp=")
            .ok_or_else(|| format!("unknown field `{}` (expected `Q p=<prime>` or `Q(t)`)", s.trim()))?;
        let p: BigInt = p.parse().map_err(|_| format!("bad prime `{p}`"))?;
        PAdic::new(p.clone()).map_err(|e| e.to_string())?;
        Ok(FieldConfig::PAdic(p))
    }
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldConfig::PAdic(p) => write!(f, "Q p={p}"),
            FieldConfig::TAdic => write!(f, "Q(t)"),
        }
    }
}

/// A parsed header plus the raw polynomial lines (1-based line numbers).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub field: FieldConfig,
    pub lines: Vec<(usize, String)>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let mut vars: Option<Vec<String>> = None;
        let mut field: Option<FieldConfig> = None;
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let no = i + 1;
            let line = strip_comment(raw);
            if line.trim().is_empty() {
                continue;
            }
            if let Some((key, value)) = line.split_once(':') {
                if !lines.is_empty() {
                    return Err(InputError::at(no, 1, "header line after the first polynomial"));
                }
                let vcol = key.len() + 2;
                match key.trim() {
                    "vars" => {
                        let names: Vec<String> = value.split(',').map(|s| s.trim().to_string()).collect();
                        if let Some(bad) = names.iter().find(|n| !valid_ident(n)) {
                            return Err(InputError::at(no, vcol, format!("bad variable name `{bad}`")));
                        }
                        for (k, n) in names.iter().enumerate() {
                            if names[..k].contains(n) || n == "t" {
                                return Err(InputError::at(no, vcol, format!("variable `{n}` repeated or reserved")));
                            }
                        }
                        vars = Some(names);
                    }
                    "field" => field = Some(FieldConfig::parse(value).map_err(|m| InputError::at(no, vcol, m))?),
                    other => return Err(InputError::at(no, 1, format!("unknown header `{other}`"))),
                }
                continue;
            }
            lines.push((no, line.to_string()));
        }
        let vars = vars.ok_or_else(|| InputError::at(1, 1, "missing `vars:` header"))?;
        let field = field.ok_or_else(|| InputError::at(1, 1, "missing `field:` header"))?;
        if lines.is_empty() {
            return Err(InputError::at(text.lines().count().max(1), 1, "no polynomials in file"));
        }
        Ok(IdealFile { vars, field, lines })
    }

    pub fn ring(&self) -> Arc<Ring> {
        Ring::new(self.vars.iter().cloned())
    }

    /// Parses every body line over `F`; zero polynomials are rejected.
    pub fn polynomials<F: Field>(&self) -> Result<(Arc<Ring>, Vec<Polynomial<F>>), InputError> {
        let ring = self.ring();
        let polys = self
            .lines
            .iter()
            .map(|(no, src)| {
                let p = parse_polynomial::<F>(src, &ring).map_err(|e| InputError::at(*no, e.col, e.msg))?;
                if p.is_zero() {
                    return Err(InputError::at(*no, 1, "polynomial is zero"));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((ring, polys))
    }
}

/// `(a,b,c)` tuples, several per projection, projections separated by `;`.
/// `()` or an empty segment is a projection without kernel rows.
pub fn parse_kernels(s: &str) -> Result<Vec<Vec<Vec<i64>>>, String> {
    s.split(';').map(parse_kernel).collect()
}

pub fn parse_kernel(s: &str) -> Result<Vec<Vec<i64>>, String> {
    let mut rows = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| format!("expected `(` in kernel `{}`", s.trim()))?;
        let close = body.find(')').ok_or_else(|| format!("unclosed `(` in kernel `{}`", s.trim()))?;
        let inner = body[..close].trim();
        if !inner.is_empty() {
            rows.push(parse_int_list(inner)?);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(rows)
}

pub fn parse_int_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad integer `{}`", x.trim())))
        .collect()
}

/// Comma-separated rationals such as `1, -1/2, 3`.
pub fn parse_point(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(|x| parse_rational(x.trim()).ok_or_else(|| format!("bad rational `{}`", x.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "# Example ideal\nvars: x,y,z\nfield: Q p=2\n2*x+y-4\nx+2*y+z-1\n";

    #[test]
    fn example_file() {
        let f = IdealFile::parse(EXAMPLE).unwrap();
        assert_eq!(f.vars, vec!["x", "y", "z"]);
        assert_eq!(f.field, FieldConfig::PAdic(2.into()));
        let (_, polys) = f.polynomials::<Rational>().unwrap();
        assert_eq!(polys.len(), 2);
        assert_eq!(polys[1].to_string(), "x + 2*y + z - 1");
    }

    #[test]
    fn undeclared_variable_has_position() {
        let f = IdealFile::parse("vars: x\nfield: Q p=3\nx+1\n2*w+1\n").unwrap();
        let e = f.polynomials::<Rational>().unwrap_err();
        assert_eq!((e.line, e.col), (4, 3));
        assert!(e.msg.contains("undeclared"), "{}", e.msg);
    }

    #[test]
    fn header_errors() {
        assert!(IdealFile::parse("vars: x\nfield: Q p=2\n# nothing\n").unwrap_err().msg.contains("no polynomials"));
        assert!(IdealFile::parse("vars: x\nfield: Q p=4\nx\n").is_err());
        assert!(IdealFile::parse("field: Q p=2\nx\n").unwrap_err().msg.contains("vars"));
        let z = IdealFile::parse("vars: x\nfield: Q p=2\nx-x\n").unwrap();
        assert!(z.polynomials::<Rational>().unwrap_err().msg.contains("zero"));
        assert_eq!(IdealFile::parse("vars: x\nfield: Q(t)\nt*x+1\n").unwrap().field, FieldConfig::TAdic);
    }

    #[test]
    fn kernel_syntax() {
        assert_eq!(
            parse_kernels("(0,0,1);(1,2,0);(1,0,1)").unwrap(),
            vec![vec![vec![0, 0, 1]], vec![vec![1, 2, 0]], vec![vec![1, 0, 1]]]
        );
        assert_eq!(parse_kernels("(1,0,0,2)(0,1,1,0)").unwrap(), vec![vec![vec![1, 0, 0, 2], vec![0, 1, 1, 0]]]);
        assert_eq!(parse_kernels("();()").unwrap(), vec![Vec::<Vec<i64>>::new(), Vec::new()]);
        assert!(parse_kernels("(1,2").is_err());
        assert!(parse_kernels("1,2").is_err());
    }

    #[test]
    fn points() {
        let p = parse_point("1, -1/2,0").unwrap();
        assert_eq!(p[1], Rational::new((-1).into(), 2.into()));
        assert!(parse_point("1,x").is_err());
    }
}

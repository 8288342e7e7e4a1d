use std::path::Path;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Map, Value};
use tritab::spectra::{
    charpoly_a, charpoly_p, charpoly_q, eigs_a, eigs_p, eigs_q, make_a, make_p, make_q,
};
use tritab::{ClassOne, ClassTwo, Error, TridiagonalMatrix};

use crate::args::{FamilyArgs, Kind};
use crate::error::CliError;

/// A structured family with its parameters resolved.
#[derive(Debug, Clone, Copy)]
pub enum Family {
    A { n: usize },
    P { n: usize, a: f64 },
    Q { n: usize, a: f64, b: f64, c: f64 },
    ClassI(ClassOne),
    ClassII(ClassTwo),
}

fn required<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::invalid(format!("--kind {kind} requires --{flag}")))
}

fn finite(value: f64, flag: &str) -> Result<f64, CliError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(CliError::invalid(format!(
            "--{flag} must be finite, got {value}"
        )))
    }
}

impl FamilyArgs {
    /// The flags that were given, by name.
    fn given(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.n.is_some() {
            out.push("n");
        }
        if self.a.is_some() {
            out.push("a");
        }
        if self.b.is_some() {
            out.push("b");
        }
        if self.c.is_some() {
            out.push("c");
        }
        if self.d.is_some() {
            out.push("d");
        }
        if self.alpha.is_some() {
            out.push("alpha");
        }
        if self.gamma.is_some() {
            out.push("gamma");
        }
        out
    }

    /// Rejects parameters that the chosen family does not take.
    fn only(&self, kind: &str, allowed: &[&str]) -> Result<(), CliError> {
        match self.given().into_iter().find(|f| !allowed.contains(f)) {
            Some(flag) => Err(CliError::invalid(format!(
                "--{flag} does not apply to --kind {kind}"
            ))),
            None => Ok(()),
        }
    }

    pub fn family(&self) -> Result<Family, CliError> {
        let kind = self
            .kind
            .ok_or_else(|| CliError::invalid("--kind is required"))?;
        let family = match kind {
            Kind::A => {
                self.only("A", &["n"])?;
                Family::A {
                    n: required(self.n, "n", "A")?,
                }
            }
            Kind::P => {
                self.only("P", &["n", "a"])?;
                Family::P {
                    n: required(self.n, "n", "P")?,
                    a: finite(required(self.a, "a", "P")?, "a")?,
                }
            }
            Kind::Q => {
                self.only("Q", &["n", "a", "b", "c"])?;
                Family::Q {
                    n: required(self.n, "n", "Q")?,
                    a: finite(required(self.a, "a", "Q")?, "a")?,
                    b: finite(required(self.b, "b", "Q")?, "b")?,
                    c: finite(required(self.c, "c", "Q")?, "c")?,
                }
            }
            Kind::ClassI => {
                self.only("classI", &["d", "alpha"])?;
                Family::ClassI(ClassOne::new(
                    required(self.d, "d", "classI")?,
                    required(self.alpha, "alpha", "classI")?,
                )?)
            }
            Kind::ClassII => {
                self.only("classII", &["d", "alpha", "gamma"])?;
                Family::ClassII(ClassTwo::new(
                    required(self.d, "d", "classII")?,
                    required(self.alpha, "alpha", "classII")?,
                    required(self.gamma, "gamma", "classII")?,
                )?)
            }
        };
        if let Family::A { n: 0 } | Family::P { n: 0, .. } | Family::Q { n: 0, .. } = family {
            return Err(Error::EmptyMatrix.into());
        }
        Ok(family)
    }
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::A { .. } => "A",
            Family::P { .. } => "P",
            Family::Q { .. } => "Q",
            Family::ClassI(_) => "classI",
            Family::ClassII(_) => "classII",
        }
    }

    pub fn inputs(&self) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.name()));
        match *self {
            Family::A { n } => {
                m.insert("n".into(), json!(n));
            }
            Family::P { n, a } => {
                m.insert("n".into(), json!(n));
                m.insert("a".into(), json!(a));
            }
            Family::Q { n, a, b, c } => {
                m.insert("n".into(), json!(n));
                m.insert("a".into(), json!(a));
                m.insert("b".into(), json!(b));
                m.insert("c".into(), json!(c));
            }
            Family::ClassI(one) => {
                m.insert("d".into(), json!(one.d()));
                m.insert("alpha".into(), json!(one.alpha()));
            }
            Family::ClassII(two) => {
                m.insert("d".into(), json!(two.d()));
                m.insert("alpha".into(), json!(two.alpha()));
                m.insert("gamma".into(), json!(two.gamma()));
            }
        }
        m
    }

    pub fn matrix(&self) -> Result<TridiagonalMatrix, CliError> {
        Ok(match *self {
            Family::A { n } => make_a(n)?,
            Family::P { n, a } => make_p(n, a)?,
            Family::Q { n, a, b, c } => make_q(n, a, b, c)?,
            Family::ClassI(one) => one.spec().first_intersection_matrix(),
            Family::ClassII(two) => two.spec().first_intersection_matrix(),
        })
    }

    /// Closed-form eigenvalues, descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>, CliError> {
        Ok(match *self {
            Family::A { n } => eigs_a(n),
            Family::P { n, a } => eigs_p(n, a)?,
            Family::Q { n, a, b, c } => eigs_q(n, a, b, c)?,
            Family::ClassI(one) => one.eigenvalues(),
            Family::ClassII(two) => two.eigenvalues(),
        })
    }

    /// Closed-form `det(x I - M)`.
    pub fn charpoly(&self, x: f64) -> Result<f64, CliError> {
        Ok(match *self {
            Family::A { n } => charpoly_a(n, x),
            Family::P { n, a } => charpoly_p(n, a, x)?,
            Family::Q { n, a, b, c } => charpoly_q(n, a, b, c, x)?,
            Family::ClassI(one) => one.charpoly(x),
            Family::ClassII(two) => two.charpoly(x),
        })
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    n: usize,
    sub: Vec<f64>,
    diag: Vec<f64>,
    sup: Vec<f64>,
}

/// Reads `{"n": int, "sub": [...], "diag": [...], "sup": [...]}`.
pub fn read_matrix(path: &Path) -> Result<TridiagonalMatrix, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("cannot read {}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn parse_matrix(text: &str) -> Result<TridiagonalMatrix, CliError> {
    let file: MatrixFile = serde_json::from_str(text)
        .map_err(|e| CliError::invalid(format!("malformed matrix file: {e}")))?;
    if file.diag.len() != file.n {
        return Err(Error::DimensionMismatch {
            expected: file.n,
            actual: file.diag.len(),
        }
        .into());
    }
    Ok(TridiagonalMatrix::new(file.sub, file.diag, file.sup)?)
}

pub fn matrix_json(m: &TridiagonalMatrix) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("n".into(), json!(m.order()));
    out.insert("sub".into(), json!(m.sub()));
    out.insert("diag".into(), json!(m.diag()));
    out.insert("sup".into(), json!(m.sup()));
    out
}

/// Entries uniform in `[-5, 5]`, subdiagonal magnitudes in `[0.1, 5]` with
/// random sign.
pub fn random_tridiagonal(rng: &mut ChaCha8Rng, n: usize) -> TridiagonalMatrix {
    let sub = (0..n.saturating_sub(1))
        .map(|_| {
            let mag: f64 = rng.gen_range(0.1..=5.0);
            if rng.gen_bool(0.5) {
                mag
            } else {
                -mag
            }
        })
        .collect();
    let diag = (0..n).map(|_| rng.gen_range(-5.0..=5.0)).collect();
    let sup = (0..n.saturating_sub(1))
        .map(|_| rng.gen_range(-5.0..=5.0))
        .collect();
    TridiagonalMatrix::new(sub, diag, sup).expect("band lengths match")
}

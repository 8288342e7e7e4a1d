use serde_json::{json, Map, Value};
use tritab::plu::{
    b1_charpoly_via_plu, left_eigenvector, log_det_via_plu, right_eigenvector,
    EIGENVECTOR_TOLERANCE,
};
use tritab::spectra::{eigs_a, eigs_p, eigs_q, make_a, make_p, make_q};
use tritab::{oracle, ClassOne, ClassTwo, Error, PluFactors, TableAlgebraSpec, TridiagonalMatrix};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{ClassKind, FamilyArgs, Method, Suite};
use crate::error::CliError;
use crate::family::{matrix_json, random_tridiagonal, read_matrix, Family};
use crate::report::{number, numbers, rows, Check, RunReport, Tabular};

/// Relative difference of two `(sign, ln|v|)` pairs, as `|a/b - 1|`.
fn log_relative(a: (f64, f64), b: (f64, f64)) -> f64 {
    if a.0 != b.0 {
        return f64::INFINITY;
    }
    if a.0 == 0.0 {
        return 0.0;
    }
    (a.1 - b.1).exp_m1().abs()
}

fn relative(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(1.0)
}

pub fn spectrum(
    args: &FamilyArgs,
    verify: bool,
    tolerance: f64,
) -> Result<(RunReport, Tabular), CliError> {
    let family = args.family()?;
    let eigenvalues = family.eigenvalues()?;
    let mut report = RunReport::new("spectrum", family.inputs());
    report
        .outputs
        .insert("eigenvalues".into(), numbers("eigenvalue", &eigenvalues)?);
    if verify {
        let m = family.matrix()?;
        for (k, &x) in eigenvalues.iter().enumerate() {
            let sample = m.charpoly_sample(x);
            report.checks.push(Check::within(
                format!("charpoly_residual[{}]", k + 1),
                sample.scaled_residual(),
                tolerance,
            ));
        }
    }
    let tabular = Tabular::Indexed {
        index: "k",
        start: 1,
        value: "eigenvalue",
        values: eigenvalues,
    };
    Ok((report, tabular))
}

pub fn charpoly(
    args: &FamilyArgs,
    matrix: Option<&std::path::Path>,
    points: &[f64],
    coeffs: bool,
    verify: bool,
    tolerance: f64,
) -> Result<(RunReport, Tabular), CliError> {
    if points.is_empty() && !coeffs {
        return Err(CliError::invalid(
            "give evaluation points with --x or ask for --coeffs",
        ));
    }
    if let Some(x) = points.iter().find(|x| !x.is_finite()) {
        return Err(CliError::invalid(format!("--x must be finite, got {x}")));
    }
    let (family, m, mut inputs) = match matrix {
        Some(path) => {
            if args != &FamilyArgs::default() {
                return Err(CliError::invalid(
                    "--matrix does not combine with family parameters",
                ));
            }
            let m = read_matrix(path)?;
            let inputs = Map::from_iter([("matrix".to_string(), Value::Object(matrix_json(&m)))]);
            (None, m, inputs)
        }
        None => {
            let family = args.family()?;
            let m = family.matrix()?;
            (Some(family), m, family.inputs())
        }
    };
    inputs.insert("x".into(), numbers("x", points)?);
    let mut report = RunReport::new("charpoly", inputs);

    let recurrence: Vec<f64> = points.iter().map(|&x| m.charpoly_eval(x)).collect();
    let values = match family {
        Some(f) => points
            .iter()
            .map(|&x| f.charpoly(x))
            .collect::<Result<Vec<_>, _>>()?,
        None => recurrence.clone(),
    };
    if !points.is_empty() {
        report.outputs.insert(
            "values".into(),
            numbers("characteristic polynomial value", &values)?,
        );
    }
    if verify {
        for (k, (&x, (&v, &r))) in points
            .iter()
            .zip(values.iter().zip(&recurrence))
            .enumerate()
        {
            let residual = match family {
                Some(_) => relative(v, r),
                None => {
                    let reference = if m.order() <= oracle::COFACTOR_MAX_ORDER {
                        oracle::cofactor_det(&m.shifted(x).to_dense())?
                    } else {
                        oracle::dense_det(&m.shifted(x).to_dense())?
                    };
                    relative(r, reference)
                }
            };
            report.checks.push(Check::within(
                format!("closed_vs_reference[{}]", k + 1),
                residual,
                tolerance,
            ));
        }
    }

    let mut coefficients = None;
    if coeffs {
        let c = m.charpoly_coeffs()?.into_coeffs();
        report
            .outputs
            .insert("coefficients".into(), numbers("coefficient", &c)?);
        if verify {
            let n = m.order();
            report
                .checks
                .push(Check::flag("monic", c.len() == n + 1 && c[n] == 1.0));
            let trace = m.trace();
            report.checks.push(Check::within(
                "next_coefficient_is_minus_trace",
                relative(-c[n - 1], trace),
                tolerance,
            ));
        }
        coefficients = Some(c);
    }

    let tabular = match coefficients {
        Some(c) if points.is_empty() => Tabular::Indexed {
            index: "power",
            start: 0,
            value: "coefficient",
            values: c,
        },
        _ => Tabular::Pairs {
            left: "x",
            right: "value",
            rows: points.iter().copied().zip(values).collect(),
        },
    };
    Ok((report, tabular))
}

pub fn characters(
    class: ClassKind,
    d: usize,
    alpha: f64,
    gamma: Option<f64>,
    method: Method,
    tolerance: f64,
) -> Result<(RunReport, Tabular), CliError> {
    let family = match (class, gamma) {
        (ClassKind::One, None) => Family::ClassI(ClassOne::new(d, alpha)?),
        (ClassKind::One, Some(_)) => {
            return Err(CliError::invalid("--gamma does not apply to --class I"))
        }
        (ClassKind::Two, Some(g)) => Family::ClassII(ClassTwo::new(d, alpha, g)?),
        (ClassKind::Two, None) => return Err(CliError::invalid("--class II requires --gamma")),
    };
    let (closed, spec) = match family {
        Family::ClassI(one) => (one.characters(), one.spec()),
        Family::ClassII(two) => (two.characters(), two.spec()),
        _ => unreachable!("only table algebra classes reach here"),
    };
    let mut inputs = family.inputs();
    inputs.insert(
        "class".into(),
        json!(if class == ClassKind::One { "I" } else { "II" }),
    );
    inputs.remove("kind");
    inputs.insert(
        "method".into(),
        json!(match method {
            Method::Closed => "closed",
            Method::Generic => "generic",
            Method::Both => "both",
        }),
    );
    let mut report = RunReport::new("characters", inputs);
    let table = match method {
        Method::Closed => closed,
        Method::Generic => spec.character_table()?,
        Method::Both => {
            let generic = spec.character_table()?;
            let discrepancy = closed.max_relative_discrepancy(&generic)?;
            report
                .outputs
                .insert("discrepancy".into(), number("discrepancy", discrepancy)?);
            report
                .checks
                .push(Check::within("closed_vs_generic", discrepancy, tolerance));
            closed
        }
    };
    report.checks.push(Check::flag(
        "row_zero_is_ones",
        table.rows()[0].iter().all(|&v| v == 1.0),
    ));
    report
        .outputs
        .insert("table".into(), rows("character", table.rows())?);
    Ok((report, Tabular::Characters(table)))
}

/// `(residual, bound)` for `‖P L U - M‖∞` against `4 n ε ‖|L| |U|‖∞`.
fn reconstruction(factors: &PluFactors, m: &TridiagonalMatrix) -> Result<(f64, f64), CliError> {
    let residual = factors.reconstruction_residual(m)?;
    let bound = 4.0 * m.order() as f64 * f64::EPSILON * factors.abs_factor_norm();
    Ok((residual, bound))
}

pub fn plu(
    args: &FamilyArgs,
    matrix: Option<&std::path::Path>,
    random: bool,
    seed: u64,
) -> Result<(RunReport, Tabular), CliError> {
    let (m, inputs) = if let Some(path) = matrix {
        if args != &FamilyArgs::default() {
            return Err(CliError::invalid(
                "--matrix does not combine with family parameters",
            ));
        }
        let m = read_matrix(path)?;
        let inputs = Map::from_iter([("matrix".to_string(), Value::Object(matrix_json(&m)))]);
        (m, inputs)
    } else if random {
        let only_n = FamilyArgs {
            n: args.n,
            ..Default::default()
        };
        if args != &only_n {
            return Err(CliError::invalid("--random takes only --n"));
        }
        let n = args
            .n
            .ok_or_else(|| CliError::invalid("--random requires --n"))?;
        if n == 0 {
            return Err(Error::EmptyMatrix.into());
        }
        let m = random_tridiagonal(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let inputs = Map::from_iter([
            ("random".to_string(), json!(true)),
            ("n".to_string(), json!(n)),
            ("seed".to_string(), json!(seed)),
        ]);
        (m, inputs)
    } else {
        let family = args.family()?;
        (family.matrix()?, family.inputs())
    };

    let factors = PluFactors::factor(&m)?;
    let n = m.order();
    let mut report = RunReport::new("plu", inputs);
    let perm = factors.permutation();
    let source: Vec<usize> = (0..n).map(|i| perm.source_row(i) + 1).collect();
    let out = &mut report.outputs;
    out.insert("n".into(), json!(n));
    out.insert("perm".into(), json!(source));
    out.insert("lrow".into(), numbers("L row entry", factors.lrow())?);
    out.insert("u_diag".into(), numbers("U entry", factors.u_diag())?);
    out.insert("u_sup1".into(), numbers("U entry", factors.u_sup1())?);
    out.insert("u_sup2".into(), numbers("U entry", factors.u_sup2())?);
    out.insert("ucorner".into(), number("U corner", factors.ucorner())?);

    let via_plu = log_det_via_plu(&m)?;
    let via_recurrence = m.log_det();
    out.insert("det_sign".into(), json!(via_plu.0));
    if via_plu.0 != 0.0 {
        out.insert("log_abs_det".into(), number("log determinant", via_plu.1)?);
    }
    let det = factors.determinant();
    if det.is_finite() {
        out.insert("det".into(), json!(det));
    }

    let (residual, bound) = reconstruction(&factors, &m)?;
    out.insert(
        "reconstruction_residual".into(),
        number("reconstruction residual", residual)?,
    );
    out.insert(
        "reconstruction_bound".into(),
        number("reconstruction bound", bound)?,
    );
    report
        .checks
        .push(Check::within("reconstruction", residual, bound));
    report.checks.push(Check::within(
        "det_vs_recurrence",
        log_relative(via_plu, via_recurrence),
        1e-8,
    ));
    Ok((report, Tabular::Checks))
}

struct Aggregate {
    name: String,
    worst: f64,
}

impl Aggregate {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            worst: 0.0,
        }
    }

    fn add(&mut self, residual: f64) {
        if residual.is_nan() || residual > self.worst {
            self.worst = if residual.is_nan() {
                f64::INFINITY
            } else {
                residual
            };
        }
    }

    fn check(&self, tolerance: f64) -> Check {
        Check::within(self.name.clone(), self.worst, tolerance)
    }
}

fn max_relative_gap(closed: &[f64], reference: &[f64]) -> f64 {
    if closed.len() != reference.len() {
        return f64::INFINITY;
    }
    closed
        .iter()
        .zip(reference)
        .map(|(c, r)| (c - r).abs() / (1.0 + r.abs()))
        .fold(0.0, f64::max)
}

fn spectra_suite(
    rng: &mut ChaCha8Rng,
    max_n: usize,
    tolerance: f64,
) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for name in ["A", "P", "Q"] {
        let mut vs_oracle = Aggregate::new(format!("{name}.eigenvalues_vs_oracle"));
        let mut residual = Aggregate::new(format!("{name}.charpoly_residual"));
        let mut trace = Aggregate::new(format!("{name}.eigenvalue_sum_vs_trace"));
        for n in 1..=max_n {
            let (m, eigs) = match name {
                "A" => (make_a(n)?, eigs_a(n)),
                "P" => {
                    let a = rng.gen_range(0.5..3.0);
                    (make_p(n, a)?, eigs_p(n, a)?)
                }
                _ => {
                    let a = rng.gen_range(-3.0..3.0);
                    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                    let b = sign * rng.gen_range(0.2..3.0);
                    let c = sign * rng.gen_range(0.2..3.0);
                    (make_q(n, a, b, c)?, eigs_q(n, a, b, c)?)
                }
            };
            vs_oracle.add(max_relative_gap(&eigs, &oracle::eig_roots(&m)?));
            for &x in &eigs {
                residual.add(m.charpoly_sample(x).scaled_residual());
            }
            let sum: f64 = eigs.iter().sum();
            trace.add((sum - m.trace()).abs() / (1.0 + m.norm_inf() * n as f64));
        }
        out.extend([
            vs_oracle.check(tolerance),
            residual.check(tolerance),
            trace.check(tolerance),
        ]);
    }
    Ok(out)
}

/// Class I and class II specs for `d = 2..=max_d` with `α, γ ∈ [1, 3)`.
fn class_specs(
    rng: &mut ChaCha8Rng,
    max_d: usize,
) -> Result<Vec<(&'static str, Family)>, CliError> {
    let mut specs = Vec::new();
    for d in 2..=max_d {
        let alpha = rng.gen_range(1.0..3.0);
        specs.push(("classI", Family::ClassI(ClassOne::new(d, alpha)?)));
        let alpha = rng.gen_range(1.0..3.0);
        let gamma = rng.gen_range(1.0..3.0);
        specs.push(("classII", Family::ClassII(ClassTwo::new(d, alpha, gamma)?)));
    }
    Ok(specs)
}

fn spec_of(family: &Family) -> TableAlgebraSpec {
    match family {
        Family::ClassI(one) => one.spec(),
        Family::ClassII(two) => two.spec(),
        _ => unreachable!("class specs only"),
    }
}

fn characters_suite(
    rng: &mut ChaCha8Rng,
    max_d: usize,
    tolerance: f64,
) -> Result<Vec<Check>, CliError> {
    let mut discrepancy = [
        Aggregate::new("classI.closed_vs_generic"),
        Aggregate::new("classII.closed_vs_generic"),
    ];
    let mut eigen = [
        Aggregate::new("classI.eigenvalues_vs_oracle"),
        Aggregate::new("classII.eigenvalues_vs_oracle"),
    ];
    let mut row_zero = true;
    for (name, family) in class_specs(rng, max_d)? {
        let slot = usize::from(name == "classII");
        let spec = spec_of(&family);
        let closed = match family {
            Family::ClassI(one) => one.characters(),
            Family::ClassII(two) => two.characters(),
            _ => unreachable!("class specs only"),
        };
        let generic = spec.character_table()?;
        discrepancy[slot].add(closed.max_relative_discrepancy(&generic)?);
        eigen[slot].add(max_relative_gap(
            &family.eigenvalues()?,
            &oracle::eig_roots(&spec.first_intersection_matrix())?,
        ));
        row_zero &= closed.rows()[0].iter().all(|&v| v == 1.0);
    }
    let mut out: Vec<Check> = discrepancy
        .iter()
        .chain(&eigen)
        .map(|a| a.check(tolerance))
        .collect();
    out.push(Check::flag("row_zero_is_ones", row_zero));
    Ok(out)
}

fn plu_suite(rng: &mut ChaCha8Rng, max_n: usize, max_d: usize) -> Result<Vec<Check>, CliError> {
    let mut det = Aggregate::new("plu.det_vs_recurrence");
    let mut backward = Aggregate::new("plu.reconstruction_over_bound");
    for n in 3..=max_n.max(3) {
        let m = random_tridiagonal(rng, n);
        let factors = PluFactors::factor(&m)?;
        det.add(log_relative(log_det_via_plu(&m)?, m.log_det()));
        let (residual, bound) = reconstruction(&factors, &m)?;
        backward.add(if residual == 0.0 {
            0.0
        } else {
            residual / bound
        });
    }
    let mut charpoly = Aggregate::new("plu.b1_charpoly_vs_closed");
    let mut vectors = Aggregate::new("plu.eigenvector_residual");
    for (_, family) in class_specs(rng, max_d)? {
        let spec = spec_of(&family);
        let k = spec.b()[0];
        for x in family.eigenvalues()? {
            let scale = 1.0 + x.abs();
            let m = spec.first_intersection_matrix();
            for (v, side) in [
                (right_eigenvector(&spec, k, x), oracle::Side::Right),
                (left_eigenvector(&spec, k, x), oracle::Side::Left),
            ] {
                vectors.add(match v {
                    Ok(v) => oracle::residual(&m, x, &v, side)? / scale,
                    Err(_) => f64::INFINITY,
                });
            }
            let probe = x + 0.5;
            let closed = family.charpoly(probe)?;
            charpoly.add(relative(b1_charpoly_via_plu(&spec, k, probe)?, closed));
        }
    }
    Ok(vec![
        det.check(1e-8),
        backward.check(1.0),
        charpoly.check(1e-8),
        vectors.check(EIGENVECTOR_TOLERANCE),
    ])
}

pub fn verify(
    suite: Suite,
    max_d: usize,
    max_n: usize,
    seed: u64,
    tolerance: f64,
) -> Result<(RunReport, Tabular), CliError> {
    if max_d < 2 {
        return Err(CliError::invalid("--max-d must be at least 2"));
    }
    if max_n == 0 {
        return Err(CliError::invalid("--max-n must be at least 1"));
    }
    let name = match suite {
        Suite::All => "all",
        Suite::Spectra => "spectra",
        Suite::Characters => "characters",
        Suite::Plu => "plu",
    };
    let inputs = Map::from_iter([
        ("suite".to_string(), json!(name)),
        ("max_d".to_string(), json!(max_d)),
        ("max_n".to_string(), json!(max_n)),
        ("seed".to_string(), json!(seed)),
        ("tolerance".to_string(), number("tolerance", tolerance)?),
    ]);
    let mut report = RunReport::new("verify", inputs);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if matches!(suite, Suite::All | Suite::Spectra) {
        report
            .checks
            .extend(spectra_suite(&mut rng, max_n, tolerance)?);
    }
    if matches!(suite, Suite::All | Suite::Characters) {
        report
            .checks
            .extend(characters_suite(&mut rng, max_d, tolerance)?);
    }
    if matches!(suite, Suite::All | Suite::Plu) {
        report.checks.extend(plu_suite(&mut rng, max_n, max_d)?);
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    report.outputs.insert("passed".into(), json!(passed));
    report
        .outputs
        .insert("failed".into(), json!(report.checks.len() - passed));
    Ok((report, Tabular::Checks))
}

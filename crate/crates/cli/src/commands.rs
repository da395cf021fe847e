//! One function per subcommand. Each maps onto a library operation and
//! wraps its result in a [`Document`].

use mexpart_core::congruence::{
    spot_check_series, verify_ramanujan_family, verify_transfer, CongruenceReport,
};
use mexpart_core::mex::{p_mtt_all, p_mtt_identity, p_mtt_series_with};
use mexpart_core::parity::{
    b_series, lemma3_check_with, odd_interval_index, odd_interval_witness, parity_scan_detailed,
    theorem5_witnesses, witness_hypothesis, witness_interval, NeighborSet,
};
use mexpart_core::partition::ORACLE_CEILING;
use mexpart_core::series::partition_series;
use mexpart_core::{p_aa_oracle, p_mtt, Error, MexParams, Route};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::config::{Command, ExportKind, Params};
use crate::error::{exit, CliError};
use crate::output::Document;

/// A finished run: the document to write and the exit status.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub document: Document,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(document: Document) -> Self {
        Outcome {
            document,
            exit_code: exit::OK,
        }
    }

    fn failed_if(document: Document, failed: bool) -> Self {
        Outcome {
            document,
            exit_code: if failed { exit::VERIFICATION } else { exit::OK },
        }
    }
}

fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn params_of(p: Params) -> Result<MexParams, CliError> {
    Ok(MexParams::new(p.m, p.t)?)
}

fn order(n: u64) -> Result<usize, CliError> {
    usize::try_from(n).map_err(|_| CliError::Usage(format!("{n} is too large")))
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match *command {
        Command::Compute {
            params,
            n,
            route,
            no_check,
        } => compute(params_of(params)?, n, route.into(), !no_check),
        Command::Table {
            params,
            n,
            no_check,
        } => table(params_of(params)?, n, !no_check),
        Command::OracleCheck {
            modulus,
            residue,
            n,
        } => oracle_check(modulus, residue, n),
        Command::ParityScan { params, x } => parity_scan(params_of(params)?, x),
        Command::Lemma3 { params, n } => lemma3(params_of(params)?, n),
        Command::Witness { params, r } => witness(params_of(params)?, r),
        Command::Theorem5 { m, p, x, s } => theorem5(m, p, x, s),
        Command::Congruence {
            family,
            a,
            b,
            k,
            m,
            t,
            nmax,
            spot_checks,
        } => congruence(family, a.zip(b), k, m, t, nmax, spot_checks),
        Command::Export { kind, x, m, t } => export(kind, x, MexParams::new(m, t)?),
    }
}

fn warn_oracle_ceiling(n: u64) {
    if n > ORACLE_CEILING {
        eprintln!("warning: n = {n} is beyond the enumeration oracle's practical ceiling {ORACLE_CEILING}");
    }
}

pub fn compute(
    params: MexParams,
    n: u64,
    route: Route,
    checked: bool,
) -> Result<Outcome, CliError> {
    let mut doc = Document::new(
        "compute",
        &["n", "route", "value", "oracle", "series", "identity"],
    )
    .param("m", params.m())
    .param("t", params.t())
    .param("n", n)
    .param("route", route.name())
    .param("checked", checked);
    if route == Route::Oracle {
        warn_oracle_ceiling(n);
    }
    if checked && !(route == Route::Oracle && n > ORACLE_CEILING) {
        let values = p_mtt_all(params, n)?;
        if !values.agree() {
            return Err(Error::RouteDisagreement {
                n,
                oracle: values.oracle,
                series: values.series,
                identity: values.identity,
            }
            .into());
        }
        let Some(value) = values.get(route) else {
            return Err(Error::OracleCeiling {
                n,
                ceiling: ORACLE_CEILING,
            }
            .into());
        };
        if values.oracle.is_none() {
            doc.note(format!("oracle skipped: n > {ORACLE_CEILING}"));
        }
        doc.push(vec![
            n.into(),
            route.name().into(),
            big(value),
            values.oracle.as_ref().map(big).unwrap_or(Value::Null),
            big(&values.series),
            big(&values.identity),
        ]);
    } else {
        let value = p_mtt(params, n, route, false)?;
        let mut row = vec![
            n.into(),
            route.name().into(),
            big(&value),
            Value::Null,
            Value::Null,
            Value::Null,
        ];
        let slot = match route {
            Route::Oracle => 3,
            Route::Series => 4,
            Route::Identity => 5,
        };
        row[slot] = big(&value);
        doc.push(row);
    }
    Ok(Outcome::ok(doc))
}

pub fn table(params: MexParams, n: u64, checked: bool) -> Result<Outcome, CliError> {
    let p = partition_series(order(n)?);
    let series = p_mtt_series_with(params, &p);
    let mut doc = Document::new("table", &["n", "p", "p_mtt"])
        .param("m", params.m())
        .param("t", params.t())
        .param("n", n)
        .param("checked", checked);
    for j in 0..=n {
        let value = series.coeff(j as usize);
        if checked {
            let identity = p_mtt_identity(params, j, p.coeffs())?;
            if &identity != value {
                return Err(Error::RouteDisagreement {
                    n: j,
                    oracle: None,
                    series: value.clone(),
                    identity,
                }
                .into());
            }
        }
        doc.push(vec![j.into(), big(p.coeff(j as usize)), big(value)]);
    }
    Ok(Outcome::ok(doc))
}

pub fn oracle_check(modulus: u64, residue: u64, n: u64) -> Result<Outcome, CliError> {
    warn_oracle_ceiling(n);
    let mut doc = Document::new("oracle-check", &["n", "oracle", "series", "agree"])
        .param("A", modulus)
        .param("a", residue)
        .param("n", n);
    // (A, a) = (m t, t) exactly when a divides A
    let series = if residue != 0 && modulus.is_multiple_of(residue) {
        let params = MexParams::new(modulus / residue, residue)?;
        Some(p_mtt_series_with(params, &partition_series(order(n)?)))
    } else {
        doc.note("a does not divide A: no generating function to compare against");
        None
    };
    let mut failed = false;
    for j in 0..=n {
        let oracle = p_aa_oracle(j, modulus, residue)?;
        let (s, agree) = match &series {
            Some(s) => {
                let v = s.coeff(j as usize);
                let agree = *v == BigInt::from(oracle);
                failed |= !agree;
                (big(v), Value::Bool(agree))
            }
            None => (Value::Null, Value::Null),
        };
        doc.push(vec![j.into(), oracle.into(), s, agree]);
    }
    Ok(Outcome::failed_if(doc, failed))
}

pub fn parity_scan(params: MexParams, x: u64) -> Result<Outcome, CliError> {
    let report = parity_scan_detailed(params, x)?;
    let odd = report.odd_positions.clone().unwrap_or_default();
    let mut summary = report.clone();
    summary.odd_positions = None;
    let mut doc = Document::new("parity-scan", &["n", "parity"])
        .param("m", params.m())
        .param("t", params.t())
        .param("X", x)
        .with_report(&summary);
    doc.note(format!(
        "even {} odd {} threshold sqrt(X/3) = {:.6} margin {:.6} meets {}",
        report.even_count,
        report.odd_count,
        report.threshold,
        report.margin,
        report.meets_threshold
    ));
    let mut odd_iter = odd.iter().peekable();
    for n in 1..=x {
        let is_odd = odd_iter.next_if(|&&o| o == n).is_some();
        doc.push(vec![n.into(), (is_odd as u8).into()]);
    }
    Ok(Outcome::failed_if(doc, !report.is_consistent()))
}

pub fn lemma3(params: MexParams, n_max: u64) -> Result<Outcome, CliError> {
    if n_max == 0 {
        return Err(CliError::Usage("lemma3 needs n >= 1".into()));
    }
    let parities = p_mtt_series_with(params, &partition_series(order(n_max)?)).parity_reduce();
    let mut doc = Document::new("lemma3", &["n", "computed", "expected", "holds"])
        .param("m", params.m())
        .param("t", params.t())
        .param("n", n_max);
    let mut failures = 0u64;
    for n in 1..=n_max {
        let o = lemma3_check_with(params, n, &parities);
        failures += !o.holds() as u64;
        doc.push(vec![
            n.into(),
            o.computed.into(),
            o.expected.into(),
            o.holds().into(),
        ]);
    }
    doc.note(format!("{failures} failures"));
    Ok(Outcome::failed_if(doc, failures > 0))
}

pub fn witness(params: MexParams, r: u64) -> Result<Outcome, CliError> {
    let found = odd_interval_witness(params, r)?;
    let (lo, hi) = witness_interval(r);
    let mut doc = Document::new("witness", &["r", "lo", "hi", "hypothesis", "witness"])
        .param("m", params.m())
        .param("t", params.t())
        .param("r", r);
    doc.push(vec![
        r.into(),
        lo.into(),
        hi.into(),
        witness_hypothesis(params, r).into(),
        found.map(Value::from).unwrap_or(Value::Null),
    ]);
    Ok(Outcome::ok(doc))
}

pub fn theorem5(m: u64, p: u64, x: u64, s: u64) -> Result<Outcome, CliError> {
    let report = theorem5_witnesses(m, p, x, s)?;
    let mut doc = Document::new("theorem5", &["k", "a_k", "lo", "hi", "witness"])
        .param("m", m)
        .param("p", p)
        .param("X", x)
        .param("s", s)
        .with_report(&report);
    doc.note(format!(
        "a = {:?}; nu = {}; witnesses {} >= floor(nu/2) = {}",
        report.sequence,
        report.nu(),
        report.witnesses.len(),
        report.guaranteed()
    ));
    for (k, w) in report.witnesses.iter().enumerate() {
        doc.push(vec![
            k.into(),
            w.a_k.into(),
            w.lo.into(),
            w.hi.into(),
            w.witness.into(),
        ]);
    }
    Ok(Outcome::ok(doc))
}

fn spot_points(n_max: u64, count: u64) -> Vec<u64> {
    match count {
        0 => Vec::new(),
        1 => vec![n_max],
        c => {
            let mut v: Vec<u64> = (0..c).map(|i| i * n_max / (c - 1)).collect();
            v.dedup();
            v
        }
    }
}

pub fn congruence(
    family: Option<u64>,
    progression: Option<(u64, u64)>,
    k: u64,
    m: u64,
    t: u64,
    n_max: u64,
    spot_checks: u64,
) -> Result<Outcome, CliError> {
    let report: CongruenceReport = match (family, progression) {
        (Some(prime), None) => {
            let exponent = u32::try_from(k)
                .map_err(|_| CliError::Usage("family exponent too large".into()))?;
            verify_ramanujan_family(prime, exponent, m, t, n_max)?
        }
        (None, Some((a, b))) => verify_transfer(a, b, k, m, t, n_max)?,
        _ => {
            return Err(CliError::Usage(
                "give either --family P --k EXPONENT or --a A --b B --k MODULUS".into(),
            ))
        }
    };
    let points = spot_points(n_max, spot_checks);
    spot_check_series(&report, &points)?;

    let mut doc = Document::new("congruence", &["n", "argument", "residue"])
        .param("family", family.map(Value::from).unwrap_or(Value::Null))
        .param("a", report.a)
        .param("b", report.b)
        .param("modulus", report.modulus)
        .param("m", m)
        .param("t", t)
        .param("nmax", n_max)
        .with_report(&report);
    doc.note(format!(
        "p_{{{},{}}}({} n + {}) mod {}: {} checked, {} failures; series spot checks at {:?}",
        m * report.a * t,
        report.a * t,
        report.a,
        report.b,
        report.modulus,
        report.residues_checked,
        report.failures.len(),
        points
    ));
    for n in 0..=n_max {
        doc.push(vec![
            n.into(),
            report.argument(n).into(),
            report.residues[n as usize].into(),
        ]);
    }
    Ok(Outcome::failed_if(doc, !report.holds()))
}

pub fn export(kind: ExportKind, x: u64, params: MexParams) -> Result<Outcome, CliError> {
    let size = order(x)?;
    let doc = match kind {
        ExportKind::PartitionTable => {
            let p = partition_series(size);
            let mut doc = Document::new("export", &["n", "p"])
                .param("kind", "partition-table")
                .param("X", x);
            for (n, v) in p.coeffs().iter().enumerate() {
                doc.push(vec![n.into(), big(v)]);
            }
            doc
        }
        ExportKind::ThetaDensity => {
            let b = b_series(params, size);
            let mut doc = Document::new("export", &["n", "b", "odd_upto", "density"])
                .param("kind", "theta-density")
                .param("m", params.m())
                .param("t", params.t())
                .param("X", x);
            let mut count = 0u64;
            for n in 1..=x {
                let bit = b.get(n as usize);
                count += bit as u64;
                doc.push(vec![
                    n.into(),
                    (bit as u8).into(),
                    count.into(),
                    json!(count as f64 / n as f64),
                ]);
            }
            doc
        }
        ExportKind::NeighborParity => {
            let mut doc = Document::new("export", &["n", "size", "odd", "interval_k"])
                .param("kind", "neighbor-parity")
                .param("X", x);
            for n in 0..=x {
                let len = NeighborSet::new(n).len();
                doc.push(vec![
                    n.into(),
                    len.into(),
                    (len % 2 == 1).into(),
                    odd_interval_index(n)
                        .map(Value::from)
                        .unwrap_or(Value::Null),
                ]);
            }
            doc
        }
    };
    Ok(Outcome::ok(doc))
}

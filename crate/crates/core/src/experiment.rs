//! The random-state comparison experiment: concurrence versus content `E`.
//!
//! Each sample is `ρ₁₂ ⊗ ρ₃₄` with both factors independent 2-qubit Ginibre
//! states. Per sample we record `C(ρ₁₂) + C(ρ₃₄)` and `E(ρ₁₂₃₄)`, evaluated
//! directly from the mixed state's entropies (no convex roof, which would be
//! far too slow at this scale).

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::entropy::SubsystemEntropyCache;
use crate::error::{Error, Result};
use crate::format::fmt_sig;
use crate::geometry::{
    convoluted_area, convoluted_metric, entanglement_content_raw, normalize_content, ono_check,
    resolve_monogamy, MonogamyResolution, OnoReport,
};
use crate::matrix::c;
use crate::oracles::{concurrence, TwoQubitState};
use crate::state::MultipartiteState;
use crate::states::{bell, product_basis, random_density_with, rng_from_seed, sample_seed};

pub const CSV_HEADER: &str = "sample_id,seed,concurrence_sum,e_raw,e_normalized";

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub samples: usize,
    pub seed: u64,
    /// Ginibre rank of each 2-qubit factor (1..=4).
    pub rank: usize,
    /// Append a Bell ⊗ Bell row (expected at `(2, 2)`).
    pub inject_bell: bool,
    /// Append a product-of-pure-states row (expected at `(0, 0)`).
    pub inject_product: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            samples: 1000,
            seed: 0,
            rank: 4,
            inject_bell: false,
            inject_product: false,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1".into()));
        }
        if !(1..=4).contains(&self.rank) {
            return Err(Error::RankOutOfRange { rank: self.rank, dim: 4 });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Row {
    pub sample_id: usize,
    /// Per-sample seed; `None` for injected reference states.
    pub seed: Option<u64>,
    pub concurrence_sum: f64,
    pub e_raw: f64,
    pub e_normalized: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Summary {
    pub rows: usize,
    /// Spearman rank correlation of `concurrence_sum` and `e_normalized`;
    /// `None` when either column is constant.
    pub spearman: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Output {
    /// Sorted ascending by `concurrence_sum`, ties by `sample_id`.
    pub rows: Vec<Fig2Row>,
    pub summary: Fig2Summary,
}

/// Concurrence sum and content of `ρ₁₂ ⊗ ρ₃₄`.
pub fn evaluate_pair(
    sample_id: usize,
    seed: Option<u64>,
    rho12: MultipartiteState,
    rho34: MultipartiteState,
) -> Result<Fig2Row> {
    let full = rho12.compose(&rho34)?;
    let concurrence_sum = concurrence(&TwoQubitState::new(rho12)?)? + concurrence(&TwoQubitState::new(rho34)?)?;
    let e_raw = entanglement_content_raw(&SubsystemEntropyCache::new(&full))?;
    Ok(Fig2Row {
        sample_id,
        seed,
        concurrence_sum,
        e_raw,
        e_normalized: normalize_content(e_raw),
    })
}

fn random_row(config: &ExperimentConfig, sample_id: usize) -> Result<Fig2Row> {
    let seed = sample_seed(config.seed, sample_id as u64);
    let mut rng = rng_from_seed(seed);
    let rho12 = random_density_with(&[2, 2], config.rank, &mut rng)?;
    let rho34 = random_density_with(&[2, 2], config.rank, &mut rng)?;
    evaluate_pair(sample_id, Some(seed), rho12, rho34)
}

/// Runs the experiment. Samples are evaluated in parallel; the result depends
/// only on the config.
pub fn run_fig2(config: &ExperimentConfig) -> Result<Fig2Output> {
    config.validate()?;
    let mut rows = (0..config.samples)
        .into_par_iter()
        .map(|i| random_row(config, i))
        .collect::<Result<Vec<_>>>()?;
    let mut next_id = config.samples;
    if config.inject_bell {
        rows.push(evaluate_pair(next_id, None, bell(), bell())?);
        next_id += 1;
    }
    if config.inject_product {
        let zero = product_basis(&[2, 2], &[0, 0])?;
        rows.push(evaluate_pair(next_id, None, zero.clone(), zero)?);
    }
    sort_rows(&mut rows);
    let summary = Fig2Summary {
        rows: rows.len(),
        spearman: spearman_of_rows(&rows),
    };
    Ok(Fig2Output { rows, summary })
}

pub fn sort_rows(rows: &mut [Fig2Row]) {
    rows.sort_by(|a, b| {
        a.concurrence_sum
            .total_cmp(&b.concurrence_sum)
            .then(a.sample_id.cmp(&b.sample_id))
    });
}

pub fn spearman_of_rows(rows: &[Fig2Row]) -> Option<f64> {
    let x: Vec<f64> = rows.iter().map(|r| r.concurrence_sum).collect();
    let y: Vec<f64> = rows.iter().map(|r| r.e_normalized).collect();
    spearman(&x, &y)
}

/// Ranks starting at 1; tied values share their average rank.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let avg = (start + end + 1) as f64 / 2.0;
        for &ix in &order[start..end] {
            ranks[ix] = avg;
        }
        start = end;
    }
    ranks
}

/// Pearson correlation of the average ranks; `None` for fewer than two points,
/// mismatched lengths or a constant column.
pub fn spearman(x: &[f64], y: &[f64]) -> Option<f64> {
    if x.len() != y.len() || x.len() < 2 {
        return None;
    }
    let (rx, ry) = (average_ranks(x), average_ranks(y));
    let n = rx.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

pub fn csv_string(rows: &[Fig2Row]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let seed = r.seed.map(|s| s.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.sample_id,
            seed,
            fmt_sig(r.concurrence_sum),
            fmt_sig(r.e_raw),
            fmt_sig(r.e_normalized)
        );
    }
    out
}

/// Parses text produced by [`csv_string`].
pub fn parse_csv(text: &str) -> Result<Vec<Fig2Row>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == CSV_HEADER => {}
        _ => return Err(Error::InvalidSpec(format!("line 1: expected header `{CSV_HEADER}`"))),
    }
    let mut rows = Vec::new();
    for (ix, line) in lines {
        let lineno = ix + 1;
        let bad = |what: &str| Error::InvalidSpec(format!("line {lineno}: {what}"));
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(bad(&format!("expected 5 fields, found {}", fields.len())));
        }
        let num = |k: usize, name: &str| -> Result<f64> {
            fields[k].parse().map_err(|_| bad(&format!("invalid {name} `{}`", fields[k])))
        };
        rows.push(Fig2Row {
            sample_id: fields[0]
                .parse()
                .map_err(|_| bad(&format!("invalid sample_id `{}`", fields[0])))?,
            seed: match fields[1] {
                "" => None,
                s => Some(s.parse().map_err(|_| bad(&format!("invalid seed `{s}`")))?),
            },
            concurrence_sum: num(2, "concurrence_sum")?,
            e_raw: num(3, "e_raw")?,
            e_normalized: num(4, "e_normalized")?,
        });
    }
    Ok(rows)
}

/// Two series against the sorted sample rank, with gnuplot-style comments.
pub fn plot_data_string(output: &Fig2Output) -> String {
    let mut out = String::new();
    out.push_str("# concurrence sum and normalized content E, samples sorted by concurrence sum\n");
    let rho = output.summary.spearman.map(fmt_sig).unwrap_or_else(|| "undefined".into());
    let _ = writeln!(out, "# spearman {rho}");
    out.push_str("# rank concurrence_sum e_normalized\n");
    for (rank, r) in output.rows.iter().enumerate() {
        let _ = writeln!(out, "{rank} {} {}", fmt_sig(r.concurrence_sum), fmt_sig(r.e_normalized));
    }
    out
}

/// A pure 3-qubit state with a near-maximal AB pair weakly coupled to C,
/// tensored with a product party D.
#[derive(Debug, Clone, PartialEq)]
pub struct MonogamyScenario {
    pub coupling: f64,
    pub m_ab: f64,
    pub m_ac: f64,
    pub m_bc: f64,
    /// `²M_ABC`; zero because ABC is a product with D.
    pub area: f64,
    pub ono: OnoReport,
    pub resolution: MonogamyResolution,
    /// The measured triangle violates the inequality at this area: the premise
    /// (maximal AB together with nonzero AC/BC correlation) cannot hold.
    pub contradictory: bool,
}

/// `√(1−t)·|Φ⁺⟩_AB|0⟩_C + √t·|011⟩_ABC`, then `⊗ |0⟩_D`. `t` ∈ [0, 1].
pub fn monogamy_state(coupling: f64) -> Result<MultipartiteState> {
    if !(0.0..=1.0).contains(&coupling) {
        return Err(Error::InvalidConfig(format!("coupling {coupling} outside [0, 1]")));
    }
    let mut amps = vec![c(0.0, 0.0); 8];
    let bell_amp = ((1.0 - coupling) / 2.0).sqrt();
    amps[0b000] = c(bell_amp, 0.0);
    amps[0b110] = c(bell_amp, 0.0);
    amps[0b011] = c(coupling.sqrt(), 0.0);
    MultipartiteState::from_pure(&amps, &[2, 2, 2])?.compose(&product_basis(&[2], &[0])?)
}

pub fn monogamy_scenario(coupling: f64) -> Result<MonogamyScenario> {
    let state = monogamy_state(coupling)?;
    let cache = SubsystemEntropyCache::new(&state);
    let m_ab = convoluted_metric(&cache, 0, 1)?;
    let m_ac = convoluted_metric(&cache, 0, 2)?;
    let m_bc = convoluted_metric(&cache, 1, 2)?;
    let area = convoluted_area(&cache, 0, 1, 2)?;
    let ono = ono_check(m_ab, m_ac, m_bc, area)?;
    let resolution = resolve_monogamy(m_ac, m_bc, m_ab);
    Ok(MonogamyScenario {
        coupling,
        m_ab,
        m_ac,
        m_bc,
        area,
        contradictory: !ono.holds,
        ono,
        resolution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injected_rows() {
        let cfg = ExperimentConfig {
            samples: 3,
            seed: 5,
            inject_bell: true,
            inject_product: true,
            ..Default::default()
        };
        let out = run_fig2(&cfg).unwrap();
        assert_eq!(out.rows.len(), 5);
        let bell_row = out.rows.iter().find(|r| r.sample_id == 3).unwrap();
        assert_eq!(bell_row.e_normalized, 2.0);
        assert!((bell_row.concurrence_sum - 2.0).abs() < 1e-10);
        let prod = out.rows.iter().find(|r| r.sample_id == 4).unwrap();
        assert_eq!(prod.seed, None);
        assert!(prod.concurrence_sum.abs() < 1e-12 && prod.e_raw.abs() < 1e-12);
        assert!(out.rows.windows(2).all(|w| w[0].concurrence_sum <= w[1].concurrence_sum));
    }

    #[test]
    fn ranks_and_spearman() {
        assert_eq!(average_ranks(&[3.0, 1.0, 3.0, 2.0]), vec![3.5, 1.0, 3.5, 2.0]);
        assert_eq!(spearman(&[1.0, 2.0, 3.0], &[10.0, 20.0, 30.0]), Some(1.0));
        assert_eq!(spearman(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]), Some(-1.0));
        assert_eq!(spearman(&[1.0, 2.0], &[5.0, 5.0]), None);
        // Textbook: d = [0, 1, -1] → 1 − 6·2/(3·8) = 0.5.
        assert!((spearman(&[1.0, 2.0, 3.0], &[1.0, 3.0, 2.0]).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let out = run_fig2(&ExperimentConfig {
            samples: 4,
            seed: 1,
            inject_bell: true,
            ..Default::default()
        })
        .unwrap();
        let text = csv_string(&out.rows);
        assert_eq!(csv_string(&parse_csv(&text).unwrap()), text);
        assert!(parse_csv("a,b\n").is_err());
        let err = parse_csv(&format!("{CSV_HEADER}\n0,1,x,2,3\n")).unwrap_err();
        assert!(err.to_string().contains("line 2"));
    }

    #[test]
    fn config_errors() {
        let bad = ExperimentConfig { samples: 0, ..Default::default() };
        assert!(run_fig2(&bad).is_err());
        let bad = ExperimentConfig { rank: 5, samples: 1, ..Default::default() };
        assert!(run_fig2(&bad).is_err());
    }

    #[test]
    fn monogamy_scenario_shape() {
        let s = monogamy_scenario(0.05).unwrap();
        assert!(s.area.abs() < 1e-10);
        assert!(s.m_ac > s.m_ab && s.m_ab > 0.0);
        assert!(s.contradictory);
        assert_eq!(s.resolution.forced_ab, Some(0.0));
        assert!(monogamy_scenario(1.5).is_err());
        // Uncoupled: AB factors out, M_AB = 0 and the degenerate triangle is consistent.
        let s = monogamy_scenario(0.0).unwrap();
        assert!(s.m_ab.abs() < 1e-10);
        assert!((s.m_ac - 2.0).abs() < 1e-10);
        assert!(!s.contradictory);
    }
}

//! Ensemble averages and a heuristic search over pure-state decompositions.
//!
//! Every pure-state ensemble realizing `ρ = Σ_i λ_i |e_i><e_i|` (rank `r`) has
//! the form `|ψ_j> = Σ_i U_ji √λ_i |e_i>` for a `k x r` isometry `U`. Here `U`
//! is the first `r` columns of a product of phased Givens rotations on `C^k`,
//! which covers every isometry up to row phases (row phases do not change the
//! members).
//!
//! [`roof_minimize`] walks a fixed, seed-determined sequence of candidate
//! ensembles (eigen-ensemble first, then adaptive coordinate search and random
//! restarts) and returns the best average seen. The budget only truncates that
//! sequence, so the result never increases with the budget. The
//! value is an upper bound on the convex-roof infimum, not the infimum itself.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::entropy::SubsystemEntropyCache;
use crate::error::{Error, Result};
use crate::geometry::{convoluted_area, convoluted_metric, convoluted_volume, entanglement_content};
use crate::matrix::{c, hermitian_eigen, ComplexMatrix};
use crate::state::{MultipartiteState, PartySubset};
use crate::states::rng_from_seed;

/// Eigenvalues at or below this are outside the support.
const RANK_TOL: f64 = 1e-12;
/// Extra ensemble members allowed beyond the rank.
pub const MAX_EXTRA_MEMBERS: usize = 4;
const WEIGHT_SUM_TOL: f64 = 1e-9;
const RECONSTRUCTION_TOL: f64 = 1e-8;
const MIN_STEP: f64 = 1e-6;
const INITIAL_STEP: f64 = PI / 4.0;
const MAX_STEP: f64 = PI;

/// A monotone evaluated on each ensemble member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Functional {
    Metric(usize, usize),
    Area(usize, usize, usize),
    Volume(PartySubset),
    Content { normalize: bool },
}

impl Functional {
    pub fn evaluate(&self, state: &MultipartiteState) -> Result<f64> {
        let cache = SubsystemEntropyCache::new(state);
        match *self {
            Functional::Metric(i, j) => convoluted_metric(&cache, i, j),
            Functional::Area(i, j, k) => convoluted_area(&cache, i, j, k),
            Functional::Volume(s) => convoluted_volume(&cache, s),
            Functional::Content { normalize } => entanglement_content(&cache, normalize),
        }
    }
}

/// Weighted states whose average is `target`.
#[derive(Debug, Clone)]
pub struct Ensemble {
    members: Vec<(f64, MultipartiteState)>,
    target: MultipartiteState,
}

impl Ensemble {
    /// Checks weights in `(0, 1]` summing to 1 and `Σ p_j ρ_j = target` (max-norm 1e-8).
    pub fn new(members: Vec<(f64, MultipartiteState)>, target: MultipartiteState) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidEnsemble("no members".into()));
        }
        let mut sum = 0.0;
        for (p, s) in &members {
            if !(*p > 0.0 && *p <= 1.0 + WEIGHT_SUM_TOL) {
                return Err(Error::InvalidEnsemble(format!("weight {p} outside (0, 1]")));
            }
            if s.dims() != target.dims() {
                return Err(Error::InvalidEnsemble("member dims differ from target".into()));
            }
            sum += p;
        }
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidEnsemble(format!("weights sum to {sum}")));
        }
        let ens = Self { members, target };
        let err = ens.reconstruction_error();
        if err > RECONSTRUCTION_TOL {
            return Err(Error::InvalidEnsemble(format!(
                "average differs from target by {err:e}"
            )));
        }
        Ok(ens)
    }

    pub fn members(&self) -> &[(f64, MultipartiteState)] {
        &self.members
    }

    pub fn target(&self) -> &MultipartiteState {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Max-norm distance between `Σ p_j ρ_j` and the target.
    pub fn reconstruction_error(&self) -> f64 {
        let side = self.target.side();
        let mut avg = ComplexMatrix::zeros(side, side);
        for (p, s) in &self.members {
            avg.add_scaled(s.matrix(), *p);
        }
        avg.max_abs_diff(self.target.matrix())
    }
}

/// `Σ p_j f(ρ_j)`.
pub fn ensemble_average(ensemble: &Ensemble, functional: Functional) -> Result<f64> {
    ensemble
        .members
        .iter()
        .try_fold(0.0, |acc, (p, s)| Ok(acc + p * functional.evaluate(s)?))
}

/// Support of a state: the eigenpairs above the rank tolerance.
#[derive(Debug, Clone)]
pub struct Support {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<Complex64>>,
}

impl Support {
    pub fn of(state: &MultipartiteState) -> Result<Self> {
        let eig = hermitian_eigen(state.matrix())?;
        let (values, vectors) = eig
            .values
            .into_iter()
            .zip(eig.vectors)
            .filter(|(l, _)| *l > RANK_TOL)
            .unzip();
        Ok(Self { values, vectors })
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }
}

/// Angles of a `k x k` unitary built from phased Givens rotations, one
/// `(θ, φ)` pair per index pair `p < q`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsometryParams {
    pub k: usize,
    pub angles: Vec<f64>,
}

impl IsometryParams {
    pub fn identity(k: usize) -> Self {
        Self {
            k,
            angles: vec![0.0; Self::len_for(k)],
        }
    }

    pub fn len_for(k: usize) -> usize {
        k * k.saturating_sub(1)
    }

    pub fn random<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Self {
        let angles = (0..Self::len_for(k))
            .map(|i| {
                if i % 2 == 0 {
                    rng.random_range(0.0..PI / 2.0)
                } else {
                    rng.random_range(0.0..2.0 * PI)
                }
            })
            .collect();
        Self { k, angles }
    }

    /// `G_1 G_2 … G_m`, each `G` acting on one coordinate pair as
    /// `[[cos θ, −e^{−iφ} sin θ], [e^{iφ} sin θ, cos θ]]`.
    pub fn unitary(&self) -> ComplexMatrix {
        let k = self.k;
        let mut u = ComplexMatrix::identity(k);
        let mut a = self.angles.chunks_exact(2);
        for p in 0..k {
            for q in p + 1..k {
                let pair = a.next().expect("angle count matches k");
                let (theta, phi) = (pair[0], pair[1]);
                let (s, cs) = theta.sin_cos();
                let e = Complex64::from_polar(1.0, phi);
                // Right-multiply: columns p and q mix.
                for row in 0..k {
                    let up = u[(row, p)];
                    let uq = u[(row, q)];
                    u[(row, p)] = up * cs + uq * e * s;
                    u[(row, q)] = -up * e.conj() * s + uq * cs;
                }
            }
        }
        u
    }
}

/// Pure-state ensemble of `ρ` obtained from the isometry described by `params`
/// (Schrödinger–HJW). `params.k` must lie in `[rank, rank + 4]`.
pub fn hjw_decomposition(rho: &MultipartiteState, params: &IsometryParams) -> Result<Ensemble> {
    let support = Support::of(rho)?;
    hjw_from_support(rho, &support, params)
}

fn hjw_from_support(rho: &MultipartiteState, support: &Support, params: &IsometryParams) -> Result<Ensemble> {
    let r = support.rank();
    let k = params.k;
    if k < r {
        return Err(Error::InvalidConfig(format!(
            "ensemble size {k} is below the rank {r}"
        )));
    }
    if k > r + MAX_EXTRA_MEMBERS {
        return Err(Error::InvalidConfig(format!(
            "ensemble size {k} exceeds rank + {MAX_EXTRA_MEMBERS}"
        )));
    }
    if params.angles.len() != IsometryParams::len_for(k) {
        return Err(Error::InvalidConfig(format!(
            "{} angles given, {} needed",
            params.angles.len(),
            IsometryParams::len_for(k)
        )));
    }
    let u = params.unitary();
    let side = rho.side();
    let roots: Vec<f64> = support.values.iter().map(|l| l.sqrt()).collect();
    let mut members = Vec::with_capacity(k);
    for j in 0..k {
        let mut psi = vec![c(0.0, 0.0); side];
        for (i, (v, root)) in support.vectors.iter().zip(&roots).enumerate() {
            let coef = u[(j, i)] * root;
            if coef == c(0.0, 0.0) {
                continue;
            }
            for (x, e) in psi.iter_mut().zip(v) {
                *x += coef * e;
            }
        }
        let weight: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if weight <= RANK_TOL {
            continue;
        }
        members.push((weight, MultipartiteState::from_pure(&psi, rho.dims())?));
    }
    Ensemble::new(members, rho.clone())
}

/// Outcome of [`roof_minimize`].
#[derive(Debug, Clone)]
pub struct RoofResult {
    /// Smallest ensemble average seen: an upper bound on the roof value.
    pub value: f64,
    pub ensemble: Ensemble,
    pub evaluations: usize,
    pub restarts: usize,
}

struct Search<'a> {
    rho: &'a MultipartiteState,
    support: Support,
    functional: Functional,
    budget: usize,
    used: usize,
    best: Option<(f64, IsometryParams)>,
}

impl Search<'_> {
    fn exhausted(&self) -> bool {
        self.used >= self.budget
    }

    /// One budgeted evaluation; `None` once the budget is spent.
    fn eval(&mut self, params: &IsometryParams) -> Result<Option<f64>> {
        if self.exhausted() {
            return Ok(None);
        }
        self.used += 1;
        let ens = hjw_from_support(self.rho, &self.support, params)?;
        let value = ensemble_average(&ens, self.functional)?;
        if self.best.as_ref().is_none_or(|(b, _)| value < *b) {
            self.best = Some((value, params.clone()));
        }
        Ok(Some(value))
    }

    /// Coordinate search from `start` with one adaptive step per angle: a
    /// successful step doubles it, a failed one reverses and halves it, so
    /// long valleys are crossed in a few evaluations.
    fn descend(&mut self, start: IsometryParams) -> Result<()> {
        let Some(mut current) = self.eval(&start)? else {
            return Ok(());
        };
        let mut point = start;
        let mut steps = vec![INITIAL_STEP; point.angles.len()];
        while steps.iter().any(|s| s.abs() >= MIN_STEP) {
            for (coord, step) in steps.iter_mut().enumerate() {
                if step.abs() < MIN_STEP {
                    continue;
                }
                let mut trial = point.clone();
                trial.angles[coord] += *step;
                let Some(v) = self.eval(&trial)? else {
                    return Ok(());
                };
                if v < current {
                    current = v;
                    point = trial;
                    *step = (2.0 * *step).clamp(-MAX_STEP, MAX_STEP);
                } else {
                    *step *= -0.5;
                }
            }
        }
        Ok(())
    }
}

/// Heuristic upper bound on `inf Σ p_j f(ψ_j)` over pure-state decompositions
/// of `rho` with `k` members.
///
/// The eigen-ensemble is always the first candidate, so the result never
/// exceeds its average. Fixed `(seed, budget)` reproduces the result exactly.
pub fn roof_minimize(
    rho: &MultipartiteState,
    functional: Functional,
    k: usize,
    budget: usize,
    seed: u64,
) -> Result<RoofResult> {
    if budget == 0 {
        return Err(Error::InvalidConfig("budget must be at least 1".into()));
    }
    let support = Support::of(rho)?;
    if support.rank() == 1 {
        let value = functional.evaluate(rho)?;
        let ensemble = Ensemble::new(vec![(1.0, rho.clone())], rho.clone())?;
        return Ok(RoofResult {
            value,
            ensemble,
            evaluations: 1,
            restarts: 0,
        });
    }
    let mut search = Search {
        rho,
        support,
        functional,
        budget,
        used: 0,
        best: None,
    };
    let mut rng = rng_from_seed(seed);
    let mut restarts = 0;
    search.descend(IsometryParams::identity(k))?;
    while !search.exhausted() {
        restarts += 1;
        let start = IsometryParams::random(k, &mut rng);
        search.descend(start)?;
    }
    let (value, params) = search.best.take().expect("at least one evaluation");
    let ensemble = hjw_from_support(rho, &search.support, &params)?;
    Ok(RoofResult {
        value,
        ensemble,
        evaluations: search.used,
        restarts,
    })
}

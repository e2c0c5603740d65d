//! Canonical and random states, and the serialized [`StateSpec`] format.
//!
//! Random constructions draw from ChaCha20 seeded with a `u64`; sample `i` of a
//! seeded batch uses [`sample_seed`], a splitmix64 mix of the batch seed and
//! `i`. Complex Gaussians are two independent standard normals (real and
//! imaginary part).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{c, ComplexMatrix};
use crate::state::{validate_density, MultipartiteState, MAX_TOTAL_DIM};

/// The generator used for every seeded construction.
pub type StateRng = ChaCha20Rng;

pub fn rng_from_seed(seed: u64) -> StateRng {
    ChaCha20Rng::seed_from_u64(seed)
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of sample `index` in a batch seeded with `seed`. Batches with
/// different seeds share no per-sample seeds in practice (a plain `seed ^ i`
/// would just permute the same set).
pub fn sample_seed(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ index)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    c(re, im)
}

/// `|Φ+><Φ+|` with `|Φ+> = (|00> + |11>)/√2`.
pub fn bell() -> MultipartiteState {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let z = c(0.0, 0.0);
    MultipartiteState::from_pure(&[c(s, 0.0), z, z, c(s, 0.0)], &[2, 2])
        .expect("bell state is well formed")
}

/// n-qubit GHZ projector, `(|0…0> + |1…1>)/√2`.
pub fn ghz(parties: usize) -> Result<MultipartiteState> {
    if parties < 2 {
        return Err(Error::TooFewParties {
            needed: 2,
            got: parties,
        });
    }
    let dims = vec![2; parties];
    let side = checked_side(&dims)?;
    let mut amps = vec![c(0.0, 0.0); side];
    amps[0] = c(1.0, 0.0);
    amps[side - 1] = c(1.0, 0.0);
    MultipartiteState::from_pure(&amps, &dims)
}

/// n-qubit W projector: equal superposition of the single-excitation basis states.
pub fn w_state(parties: usize) -> Result<MultipartiteState> {
    if parties < 2 {
        return Err(Error::TooFewParties {
            needed: 2,
            got: parties,
        });
    }
    let dims = vec![2; parties];
    let side = checked_side(&dims)?;
    let mut amps = vec![c(0.0, 0.0); side];
    for k in 0..parties {
        amps[1 << k] = c(1.0, 0.0);
    }
    MultipartiteState::from_pure(&amps, &dims)
}

/// Computational-basis product state `|d_1 d_2 … d_n>`.
pub fn product_basis(dims: &[usize], digits: &[usize]) -> Result<MultipartiteState> {
    if dims.len() != digits.len() {
        return Err(Error::InvalidSpec(format!(
            "{} digits for {} parties",
            digits.len(),
            dims.len()
        )));
    }
    let side = checked_side(dims)?;
    let mut index = 0;
    for (&d, &k) in dims.iter().zip(digits) {
        if k >= d {
            return Err(Error::InvalidSpec(format!(
                "basis digit {k} out of range for local dimension {d}"
            )));
        }
        index = index * d + k;
    }
    let mut amps = vec![c(0.0, 0.0); side];
    amps[index] = c(1.0, 0.0);
    MultipartiteState::from_pure(&amps, dims)
}

/// Werner-type two-qubit state `p |Φ+><Φ+| + (1-p) I/4`.
pub fn werner(p: f64) -> Result<MultipartiteState> {
    let mut m = bell().matrix().scale(p);
    m.add_scaled(&ComplexMatrix::identity(4), (1.0 - p) / 4.0);
    validate_density(m, &[2, 2])
}

fn checked_side(dims: &[usize]) -> Result<usize> {
    let mut side: usize = 1;
    for &d in dims {
        if d < 2 {
            return Err(Error::InvalidDimension(d));
        }
        side = side.saturating_mul(d);
        if side > MAX_TOTAL_DIM {
            return Err(Error::DimensionOverflow(side));
        }
    }
    Ok(side)
}

/// `G G† / tr(G G†)` for a `dim x rank` complex Ginibre matrix `G`.
pub fn ginibre_density<R: Rng + ?Sized>(dim: usize, rank: usize, rng: &mut R) -> Result<ComplexMatrix> {
    if rank == 0 || rank > dim {
        return Err(Error::RankOutOfRange { rank, dim });
    }
    let g: Vec<Complex64> = (0..dim * rank).map(|_| complex_gaussian(rng)).collect();
    let mut m = ComplexMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let mut acc = c(0.0, 0.0);
            for k in 0..rank {
                acc += g[i * rank + k] * g[j * rank + k].conj();
            }
            m[(i, j)] = acc;
            m[(j, i)] = acc.conj();
        }
    }
    let tr = m.trace().re;
    Ok(m.scale(1.0 / tr))
}

/// Random density matrix on `dims` from the Ginibre ensemble; Hilbert–Schmidt
/// measure when `rank` equals the total dimension.
pub fn random_density_ginibre(dims: &[usize], rank: usize, seed: u64) -> Result<MultipartiteState> {
    let mut rng = rng_from_seed(seed);
    random_density_with(dims, rank, &mut rng)
}

/// Ginibre state drawn from an existing generator.
pub fn random_density_with<R: Rng + ?Sized>(
    dims: &[usize],
    rank: usize,
    rng: &mut R,
) -> Result<MultipartiteState> {
    let side = checked_side(dims)?;
    let m = ginibre_density(side, rank, rng)?;
    Ok(MultipartiteState::from_trusted(m, dims.to_vec()))
}

/// Haar-random pure state: normalized complex Gaussian amplitudes.
pub fn random_pure(dims: &[usize], seed: u64) -> Result<MultipartiteState> {
    let mut rng = rng_from_seed(seed);
    random_pure_with(dims, &mut rng)
}

pub fn random_pure_with<R: Rng + ?Sized>(dims: &[usize], rng: &mut R) -> Result<MultipartiteState> {
    let side = checked_side(dims)?;
    let amps: Vec<Complex64> = (0..side).map(|_| complex_gaussian(rng)).collect();
    MultipartiteState::from_pure(&amps, dims)
}

/// Haar-random `d x d` unitary: Gram–Schmidt on the columns of a Ginibre matrix.
pub fn random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = (0..d)
        .map(|_| (0..d).map(|_| complex_gaussian(rng)).collect())
        .collect();
    for j in 0..d {
        for k in 0..j {
            let (done, rest) = cols.split_at_mut(j);
            let proj: Complex64 = done[k]
                .iter()
                .zip(&rest[0])
                .map(|(a, b)| a.conj() * b)
                .sum();
            for (x, q) in rest[0].iter_mut().zip(&done[k]) {
                *x -= proj * q;
            }
        }
        let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for x in cols[j].iter_mut() {
            *x /= norm;
        }
    }
    let mut u = ComplexMatrix::zeros(d, d);
    for (j, col) in cols.iter().enumerate() {
        for (i, z) in col.iter().enumerate() {
            u[(i, j)] = *z;
        }
    }
    u
}

/// Declarative description of a state, as read from spec files.
///
/// ```json
/// {"kind": "compose", "children": [{"kind": "bell"}, {"kind": "ghz", "parties": 3}]}
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum StateSpec {
    // Braces so unknown fields are rejected like in the other variants.
    Bell {},
    Ghz {
        parties: usize,
    },
    W {
        parties: usize,
    },
    ProductBasis {
        dims: Vec<usize>,
        digits: Vec<usize>,
    },
    RandomMixed {
        dims: Vec<usize>,
        /// Defaults to full rank.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rank: Option<usize>,
        seed: u64,
    },
    RandomPure {
        dims: Vec<usize>,
        seed: u64,
    },
    Compose {
        children: Vec<StateSpec>,
    },
    /// Row-major rows of `[re, im]` pairs.
    Literal {
        dims: Vec<usize>,
        matrix: Vec<Vec<[f64; 2]>>,
    },
}

impl StateSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("state specs always serialize")
    }

    /// Literal spec holding the matrix of `state`.
    pub fn literal(state: &MultipartiteState) -> Self {
        let m = state.matrix();
        let matrix = (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
            .collect();
        StateSpec::Literal {
            dims: state.dims().to_vec(),
            matrix,
        }
    }

    /// Local dimensions the spec will produce, without building it.
    pub fn dims(&self) -> Vec<usize> {
        match self {
            StateSpec::Bell {} => vec![2, 2],
            StateSpec::Ghz { parties } | StateSpec::W { parties } => vec![2; *parties],
            StateSpec::ProductBasis { dims, .. }
            | StateSpec::RandomMixed { dims, .. }
            | StateSpec::RandomPure { dims, .. }
            | StateSpec::Literal { dims, .. } => dims.clone(),
            StateSpec::Compose { children } => children.iter().flat_map(|c| c.dims()).collect(),
        }
    }
}

/// Builds the state described by `spec`; deterministic for a given spec.
pub fn build_state(spec: &StateSpec) -> Result<MultipartiteState> {
    let dims = spec.dims();
    if dims.len() > crate::state::MAX_PARTIES {
        return Err(Error::TooManyParties(dims.len()));
    }
    checked_side(&dims)?;
    match spec {
        StateSpec::Bell {} => Ok(bell()),
        StateSpec::Ghz { parties } => ghz(*parties),
        StateSpec::W { parties } => w_state(*parties),
        StateSpec::ProductBasis { dims, digits } => product_basis(dims, digits),
        StateSpec::RandomMixed { dims, rank, seed } => {
            let side = checked_side(dims)?;
            random_density_ginibre(dims, rank.unwrap_or(side), *seed)
        }
        StateSpec::RandomPure { dims, seed } => random_pure(dims, *seed),
        StateSpec::Compose { children } => {
            let mut iter = children.iter();
            let first = iter
                .next()
                .ok_or_else(|| Error::InvalidSpec("compose needs at least one child".into()))?;
            iter.try_fold(build_state(first)?, |acc, child| {
                acc.compose(&build_state(child)?)
            })
        }
        StateSpec::Literal { dims, matrix } => {
            let rows = matrix.len();
            let mut data = Vec::with_capacity(rows * rows);
            for (i, row) in matrix.iter().enumerate() {
                if row.len() != rows {
                    return Err(Error::InvalidSpec(format!(
                        "literal matrix row {i} has {} entries, expected {rows}",
                        row.len()
                    )));
                }
                data.extend(row.iter().map(|&[re, im]| c(re, im)));
            }
            validate_density(ComplexMatrix::new(rows, rows, data)?, dims)
        }
    }
}

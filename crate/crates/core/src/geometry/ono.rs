//! Ono's triangle inequality applied to convoluted metrics, and the monogamy
//! argument built on it.

use crate::error::{Error, Result};

/// Brackets closer than this to zero are reported as forced to zero.
const ZERO_BRACKET_TOL: f64 = 1e-8;
const HOLDS_SLACK: f64 = 1e-12;

/// `27 [a²+b²−c²]² [a²+c²−b²]² [c²+b²−a²]² ≤ (4·area)⁶`, evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct OnoReport {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub area: f64,
    /// `[a²+b²−c², a²+c²−b², c²+b²−a²]`.
    pub brackets: [f64; 3],
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    /// Indices into `brackets` that are zero within 1e-8.
    pub forced_zero_brackets: Vec<usize>,
}

pub fn ono_check(a: f64, b: f64, c: f64, area: f64) -> Result<OnoReport> {
    for side in [a, b, c] {
        if side < 0.0 || side.is_nan() {
            return Err(Error::NegativeSide(side));
        }
    }
    let (a2, b2, c2) = (a * a, b * b, c * c);
    let brackets = [a2 + b2 - c2, a2 + c2 - b2, c2 + b2 - a2];
    let lhs = 27.0 * brackets.iter().map(|x| x * x).product::<f64>();
    let rhs = (4.0 * area).powi(6);
    let forced_zero_brackets = brackets
        .iter()
        .enumerate()
        .filter(|(_, x)| x.abs() <= ZERO_BRACKET_TOL)
        .map(|(k, _)| k)
        .collect();
    Ok(OnoReport {
        a,
        b,
        c,
        area,
        brackets,
        lhs,
        rhs,
        holds: lhs <= rhs + HOLDS_SLACK,
        forced_zero_brackets,
    })
}

/// What a vanishing area forces on `M_AB` given `M_AC` and `M_BC`.
///
/// With zero area one bracket must vanish; each bracket pins `M_AB²` to
/// `M_BC²−M_AC²`, `M_AC²−M_BC²` or `M_AC²+M_BC²`. Candidates above
/// `max_metric` are excluded by the maximal-entanglement premise.
#[derive(Debug, Clone, PartialEq)]
pub struct MonogamyResolution {
    /// One entry per bracket; `None` where the bracket has no real solution.
    pub candidates: [Option<f64>; 3],
    pub admissible: Vec<f64>,
    /// Smallest admissible value of `M_AB`, if any.
    pub forced_ab: Option<f64>,
}

pub fn resolve_monogamy(m_ac: f64, m_bc: f64, max_metric: f64) -> MonogamyResolution {
    let (b2, c2) = (m_ac * m_ac, m_bc * m_bc);
    let squares = [c2 - b2, b2 - c2, b2 + c2];
    let candidates = squares.map(|sq| {
        if sq.abs() <= ZERO_BRACKET_TOL {
            Some(0.0)
        } else if sq > 0.0 {
            Some(sq.sqrt())
        } else {
            None
        }
    });
    let mut admissible: Vec<f64> = candidates
        .iter()
        .flatten()
        .copied()
        .filter(|&v| v <= max_metric + ZERO_BRACKET_TOL)
        .collect();
    admissible.sort_by(f64::total_cmp);
    admissible.dedup_by(|x, y| (*x - *y).abs() <= ZERO_BRACKET_TOL);
    MonogamyResolution {
        candidates,
        forced_ab: admissible.first().copied(),
        admissible,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equilateral_equality() {
        let r = ono_check(1.0, 1.0, 1.0, 3f64.sqrt() / 4.0).unwrap();
        assert!((r.lhs - 27.0).abs() < 1e-12);
        assert!((r.rhs - 27.0).abs() < 1e-12);
        assert!(r.holds);
        assert!(r.forced_zero_brackets.is_empty());
    }

    #[test]
    fn degenerate_right_triangle() {
        let r = ono_check(1.0, 1.0, 2f64.sqrt(), 0.0).unwrap();
        assert_eq!(r.forced_zero_brackets, vec![0]);
        assert!(r.lhs.abs() < 1e-20);
        assert_eq!(r.rhs, 0.0);
        assert!(r.holds);
    }

    #[test]
    fn negative_side_rejected() {
        assert!(matches!(
            ono_check(1.0, -0.5, 1.0, 0.1),
            Err(Error::NegativeSide(_))
        ));
    }

    #[test]
    fn symmetric_premise_forces_zero() {
        let t = 0.7;
        let res = resolve_monogamy(t, t, t);
        assert_eq!(res.candidates[0], Some(0.0));
        assert!((res.candidates[2].unwrap() - 2f64.sqrt() * t).abs() < 1e-15);
        assert_eq!(res.admissible, vec![0.0]);
        assert_eq!(res.forced_ab, Some(0.0));

        let r = ono_check(res.forced_ab.unwrap(), t, t, 0.0).unwrap();
        assert!(!r.forced_zero_brackets.is_empty());
        assert!(r.holds);
        // Any nonzero M_AB below √2·t violates the inequality at zero area.
        assert!(!ono_check(0.5, t, t, 0.0).unwrap().holds);
    }
}

//! Interpolation matrices for fat-point vanishing conditions, dimensions of
//! graded components of symbolic powers, α_t, and Hilbert tables.
//!
//! A form vanishes to order ≥ t at a point exactly when its Hasse
//! derivatives of order < t all vanish there; imposing only the top layer
//! |b| = t−1 is equivalent whenever the degree is at least t−1 (divided
//! powers of lower order are recovered by Euler-type identities, valid in
//! characteristic 0 and in characteristic p > d), and every component with
//! d < t is zero outright. Auto-selected primes elsewhere in the crate are
//! always larger than the degrees they meet.

use crate::field::Scalar;
use crate::linalg::ExactMatrix;
use crate::projective::{binomial, monomials, ExponentVector, PointConfiguration};
use crate::{Error, Result};
use num_traits::ToPrimitive;

/// The matrix of vanishing conditions: one row per (point, Hasse order b
/// with |b| = t_i − 1), one column per degree-d monomial in graded-lex
/// order. Row count is Σ_i C(n + t_i − 1, n), column count C(d+n, n).
#[derive(Debug, Clone)]
pub struct InterpolationMatrix {
    matrix: ExactMatrix,
    row_index: Vec<(usize, ExponentVector)>,
    column_index: Vec<ExponentVector>,
}

impl InterpolationMatrix {
    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    /// (point index, Hasse-derivative order) labeling each row.
    pub fn row_index(&self) -> &[(usize, ExponentVector)] {
        &self.row_index
    }

    /// Monomial exponent labeling each column.
    pub fn column_index(&self) -> &[ExponentVector] {
        &self.column_index
    }
}

/// Builds the conditions matrix for forms of degree `d` through the fat
/// points of `config` (each point with its own multiplicity).
pub fn conditions_matrix(config: &PointConfiguration, d: u32) -> InterpolationMatrix {
    let n = config.ambient();
    let field = config.field();
    let column_index = monomials(n, d);

    let max_b = config.multiplicities().iter().max().map_or(0, |&t| t - 1);
    // Pascal triangle of C(x, y) as scalars, x ≤ d, y ≤ max_b.
    let binom: Vec<Vec<Scalar>> = (0..=d as usize)
        .map(|x| {
            (0..=max_b as usize)
                .map(|y| Scalar::from_bigint(field, &binomial(x as u64, y as u64)))
                .collect()
        })
        .collect();

    let mut row_index = Vec::new();
    let mut rows = Vec::new();
    for (pi, (point, &t)) in config
        .points()
        .iter()
        .zip(config.multiplicities())
        .enumerate()
    {
        // coordinate powers P_i^e for e ≤ d
        let powers: Vec<Vec<Scalar>> = point
            .coords()
            .iter()
            .map(|c| {
                let mut ps = Vec::with_capacity(d as usize + 1);
                ps.push(Scalar::one(field));
                for _ in 0..d {
                    ps.push(ps.last().unwrap().mul(c));
                }
                ps
            })
            .collect();

        for b in monomials(n, t - 1) {
            let row = column_index
                .iter()
                .map(|a| {
                    let mut entry = Scalar::one(field);
                    for i in 0..=n {
                        if b[i] > a[i] {
                            return Scalar::zero(field);
                        }
                        entry = entry.mul(&binom[a[i] as usize][b[i] as usize]);
                        entry = entry.mul(&powers[i][(a[i] - b[i]) as usize]);
                    }
                    entry
                })
                .collect();
            rows.push(row);
            row_index.push((pi, b));
        }
    }

    let matrix = if rows.is_empty() {
        ExactMatrix::zero(field, 0, column_index.len())
    } else {
        ExactMatrix::from_rows(field, rows).expect("conditions matrix shape")
    };
    InterpolationMatrix {
        matrix,
        row_index,
        column_index,
    }
}

/// dim [I⁽ᵗ⁾]_d for the configuration taken with uniform multiplicity `t`:
/// C(d+n, n) minus the rank of the conditions matrix. A nonzero form of
/// degree d < t would vanish to order > d somewhere, which is impossible,
/// so those components are zero without any matrix work.
pub fn dim_symbolic_component(config: &PointConfiguration, t: u32, d: u32) -> usize {
    assert!(t >= 1, "multiplicity must be >= 1");
    let n = config.ambient();
    let total = binomial((d as u64) + (n as u64), n as u64)
        .to_usize()
        .expect("monomial count fits usize");
    if config.is_empty() {
        return total;
    }
    if d < t {
        return 0;
    }
    let fat = config.with_uniform_multiplicity(t);
    total - conditions_matrix(&fat, d).matrix().rank()
}

/// Least degree `d ≤ d_max` with a nonzero component, or `None` if every
/// component up to the bound vanishes. The default bound is 3t + 3 for nine
/// points in the plane (where the answer is at most 3t) and t·(n+1)
/// otherwise.
pub fn alpha_t(config: &PointConfiguration, t: u32, d_max: Option<u32>) -> Option<u32> {
    assert!(t >= 1, "multiplicity must be >= 1");
    let d_max = d_max.unwrap_or_else(|| default_alpha_bound(config, t));
    (0..=d_max).find(|&d| dim_symbolic_component(config, t, d) > 0)
}

pub fn default_alpha_bound(config: &PointConfiguration, t: u32) -> u32 {
    if config.len() == 9 && config.ambient() == 2 {
        3 * t + 3
    } else {
        t * (config.ambient() as u32 + 1)
    }
}

/// χ(𝓘_S^t(3t)) for nine double-free points in the plane:
/// C(3t+2, 2) − 9·C(t+1, 2). Identically 1.
pub fn euler_char_nine(t: u32) -> i64 {
    let t = t as u64;
    let chi = binomial(3 * t + 2, 2) - binomial(t + 1, 2) * 9u64;
    chi.to_i64().expect("χ fits i64")
}

/// h¹(ℙ², 𝓘_S^t(3t)) for an admissible nine-point configuration, derived
/// from χ = 1 and h² = 0: h¹ = h⁰ − 1. A vanishing h⁰ contradicts
/// admissibility (the unique cubic's t-th power is always a section) and is
/// reported as an internal inconsistency.
pub fn h1_nine(config: &PointConfiguration, t: u32) -> Result<usize> {
    if config.ambient() != 2 {
        return Err(Error::AmbientMismatch);
    }
    if config.len() != 9 {
        return Err(Error::WrongPointCount {
            expected: 9,
            got: config.len(),
        });
    }
    let h0 = dim_symbolic_component(config, t, 3 * t);
    if h0 == 0 {
        return Err(Error::Internal(
            "nine-point h\u{2070} vanished; configuration is outside the admissible locus".into(),
        ));
    }
    Ok(h0 - 1)
}

/// Which degree(s) to tabulate for each multiplicity t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeRule {
    /// d = 3t, the nine-point critical degree.
    ThreeT,
    /// One fixed degree for every t.
    Fixed(u32),
    /// All degrees 0..=bound for every t.
    UpTo(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertRecord {
    pub t: u32,
    pub d: u32,
    pub dim: usize,
    /// h⁰ − 1, populated only at the nine-point critical degree d = 3t.
    pub h1: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    pub config_id: String,
    pub records: Vec<HilbertRecord>,
}

/// Tabulates dim [I⁽ᵗ⁾]_d over a range of multiplicities, sorted by (t, d).
/// The t = 0 row is the full polynomial component C(d+n, n).
pub fn hilbert_table(
    config: &PointConfiguration,
    t_range: std::ops::RangeInclusive<u32>,
    d_rule: DegreeRule,
) -> HilbertTable {
    let n = config.ambient();
    let config_id = format!("{} points in P^{} over {}", config.len(), n, config.field());
    let mut records = Vec::new();
    for t in t_range {
        let degrees: Vec<u32> = match d_rule {
            DegreeRule::ThreeT => vec![3 * t],
            DegreeRule::Fixed(d) => vec![d],
            DegreeRule::UpTo(bound) => (0..=bound).collect(),
        };
        for d in degrees {
            let dim = if t == 0 {
                binomial((d as u64) + (n as u64), n as u64)
                    .to_usize()
                    .expect("monomial count fits usize")
            } else {
                dim_symbolic_component(config, t, d)
            };
            let h1 = if t >= 1 && n == 2 && config.len() == 9 && d == 3 * t && dim >= 1 {
                Some(dim - 1)
            } else {
                None
            };
            records.push(HilbertRecord { t, d, dim, h1 });
        }
    }
    HilbertTable { config_id, records }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::projective::{apply_pgl, ProjectivePoint};

    fn qp(raw: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_integers(FieldSpec::Rationals, raw).unwrap()
    }

    fn simple_config(pts: &[[i64; 3]]) -> PointConfiguration {
        PointConfiguration::simple(FieldSpec::Rationals, 2, pts.iter().map(|p| qp(p)).collect())
            .unwrap()
    }

    /// The 3×3 integer grid {0,1,2}² ⊂ ℙ²: the reduced, transverse
    /// intersection of the cubics x(x−z)(x−2z) and y(y−z)(y−2z). Its ideal
    /// is that complete intersection, so [I⁽ᵗ⁾]_{3t} = [Iᵗ]_{3t} is spanned
    /// by the t+1 products F₁^a F₂^b with a + b = t.
    fn grid_config() -> PointConfiguration {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                pts.push([x, y, 1]);
            }
        }
        simple_config(&pts.iter().map(|p| [p[0], p[1], p[2]]).collect::<Vec<_>>())
    }

    #[test]
    fn matrix_shapes() {
        let one = simple_config(&[[1, 2, 3]]);
        let m = conditions_matrix(&one, 1);
        assert_eq!((m.matrix().rows(), m.matrix().cols()), (1, 3));
        // multiplicity-1 row of degree-1 conditions is plain evaluation
        let row: Vec<Scalar> = (0..3).map(|j| m.matrix().at(0, j).clone()).collect();
        assert_eq!(row, one.points()[0].coords().to_vec());

        let nine = grid_config();
        let m = conditions_matrix(&nine, 3);
        assert_eq!((m.matrix().rows(), m.matrix().cols()), (9, 10));

        let t = 2;
        let fat = nine.with_uniform_multiplicity(t);
        let m = conditions_matrix(&fat, 3 * t);
        assert_eq!(
            (m.matrix().rows(), m.matrix().cols()),
            (9 * (t as usize) * (t as usize + 1) / 2, 28)
        );
        assert_eq!(m.row_index().len(), 27);
        assert_eq!(m.column_index()[0], vec![6, 0, 0]);
    }

    #[test]
    fn empty_and_low_degree() {
        let empty = PointConfiguration::empty(FieldSpec::Rationals, 2);
        assert_eq!(dim_symbolic_component(&empty, 1, 2), 6);
        assert_eq!(dim_symbolic_component(&empty, 3, 0), 1);

        let one = simple_config(&[[1, 0, 0]]);
        // degree below multiplicity: nothing survives
        assert_eq!(dim_symbolic_component(&one, 3, 1), 0);
        assert_eq!(dim_symbolic_component(&one, 2, 1), 0);
        assert_eq!(dim_symbolic_component(&one, 1, 0), 0);
        // one point, multiplicity t, degree t: the t lines through it
        // in product give C(t+2,2) − C(t+1,2) = t+1
        for t in 1..=4 {
            assert_eq!(dim_symbolic_component(&one, t, t), t as usize + 1);
        }
    }

    #[test]
    fn pencil_base_points() {
        let grid = grid_config();
        for t in 1..=3u32 {
            assert_eq!(
                dim_symbolic_component(&grid, t, 3 * t),
                t as usize + 1,
                "t = {t}"
            );
        }
    }

    #[test]
    fn alpha_examples() {
        let one = simple_config(&[[1, 2, 3]]);
        assert_eq!(alpha_t(&one, 1, None), Some(1));
        assert_eq!(alpha_t(&one, 2, None), Some(2));
        assert_eq!(alpha_t(&one, 3, None), Some(3));

        let four = simple_config(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]);
        assert_eq!(alpha_t(&four, 1, None), Some(2));

        // no line meets all three coordinate points, but the conic xy does;
        // xyz is double at each of them
        let coord = simple_config(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(alpha_t(&coord, 1, None), Some(2));
        assert_eq!(alpha_t(&coord, 2, None), Some(3));

        // bound too small → not found
        assert_eq!(alpha_t(&four, 1, Some(1)), None);
    }

    #[test]
    fn euler_characteristic() {
        assert_eq!(euler_char_nine(1), 1);
        assert_eq!(euler_char_nine(2), 1);
        for t in 1..=50 {
            assert_eq!(euler_char_nine(t), 1, "t = {t}");
        }
    }

    #[test]
    fn h1_values() {
        let grid = grid_config();
        assert_eq!(h1_nine(&grid, 1), Ok(1));
        assert_eq!(h1_nine(&grid, 3), Ok(3));
        let four = simple_config(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]);
        assert_eq!(
            h1_nine(&four, 1),
            Err(Error::WrongPointCount {
                expected: 9,
                got: 4
            })
        );
    }

    #[test]
    fn hilbert_tables() {
        let grid = grid_config();
        let table = hilbert_table(&grid, 0..=3, DegreeRule::ThreeT);
        let dims: Vec<usize> = table.records.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 2, 3, 4]);
        assert_eq!(table.records[0].h1, None); // t = 0 row
        assert_eq!(table.records[3].h1, Some(3));
        assert!(table
            .records
            .windows(2)
            .all(|w| (w[0].t, w[0].d) < (w[1].t, w[1].d)));

        let one = simple_config(&[[1, 1, 1]]);
        let table = hilbert_table(&one, 0..=0, DegreeRule::UpTo(3));
        let dims: Vec<usize> = table.records.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 3, 6, 10]);
    }

    #[test]
    fn monotonicity_and_pgl_invariance() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let field = FieldSpec::Rationals;
        for _ in 0..6 {
            let m = rng.gen_range(1..=5);
            let mut pts = Vec::new();
            while pts.len() < m {
                let cand = [
                    rng.gen_range(-6..=6),
                    rng.gen_range(-6..=6),
                    rng.gen_range(-6..=6i64),
                ];
                if cand == [0, 0, 0] {
                    continue;
                }
                let p = qp(&cand);
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
            let config = PointConfiguration::simple(field, 2, pts).unwrap();
            // dim nonincreasing in t, nondecreasing in d
            for d in 0..=4u32 {
                for t in 1..3u32 {
                    assert!(
                        dim_symbolic_component(&config, t + 1, d)
                            <= dim_symbolic_component(&config, t, d)
                    );
                }
            }
            for t in 1..=2u32 {
                for d in 0..=3u32 {
                    assert!(
                        dim_symbolic_component(&config, t, d + 1)
                            >= dim_symbolic_component(&config, t, d)
                    );
                }
            }
            // PGL invariance
            let t_mat = loop {
                let m = ExactMatrix::from_rows(
                    field,
                    (0..3)
                        .map(|_| {
                            (0..3)
                                .map(|_| Scalar::from_integer(field, rng.gen_range(-3..=3)))
                                .collect()
                        })
                        .collect(),
                )
                .unwrap();
                if m.rank() == 3 {
                    break m;
                }
            };
            let moved = apply_pgl(&t_mat, &config).unwrap();
            for t in 1..=2u32 {
                assert_eq!(alpha_t(&config, t, None), alpha_t(&moved, t, None));
            }
        }
    }

    #[test]
    fn alpha_subadditivity() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let field = FieldSpec::Rationals;
        for _ in 0..4 {
            let m = rng.gen_range(1..=4);
            let mut pts = Vec::new();
            while pts.len() < m {
                let cand = [rng.gen_range(-5..=5), rng.gen_range(-5..=5), 1i64];
                let p = qp(&cand);
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
            let config = PointConfiguration::simple(field, 2, pts).unwrap();
            let a1 = alpha_t(&config, 1, Some(12)).unwrap();
            let a2 = alpha_t(&config, 2, Some(12)).unwrap();
            let a3 = alpha_t(&config, 3, Some(12)).unwrap();
            assert!(a2 <= 2 * a1);
            assert!(a3 <= a1 + a2);
        }
    }

    #[test]
    fn prime_field_dimensions_match_rational_ones() {
        // the grid fixture has all coordinates in {0,1,2}; over a large
        // prime the ranks agree with the rational computation
        let f = FieldSpec::prime(101).unwrap();
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                pts.push(ProjectivePoint::from_integers(f, &[x, y, 1]).unwrap());
            }
        }
        let grid = PointConfiguration::simple(f, 2, pts).unwrap();
        for t in 1..=2u32 {
            assert_eq!(dim_symbolic_component(&grid, t, 3 * t), t as usize + 1);
        }
    }
}

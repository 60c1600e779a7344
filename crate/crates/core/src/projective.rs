//! Points of projective space, monomial bases in graded-lex order,
//! Hasse-derivative evaluation, and PGL standard-frame normalization.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::{self, ExactMatrix};
use crate::{Error, Result};
use num_bigint::BigInt;

/// Exponent vector of a monomial in `n+1` homogeneous variables.
pub type ExponentVector = Vec<u32>;

/// A point of projective space, stored as the unique representative whose
/// first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    /// Normalizes raw homogeneous coordinates. Errors: an all-zero vector,
    /// an empty vector, or entries from different fields.
    pub fn new(field: FieldSpec, raw: Vec<Scalar>) -> Result<ProjectivePoint> {
        if raw.is_empty() {
            return Err(Error::ZeroPoint);
        }
        if raw.iter().any(|s| s.field() != field) {
            return Err(Error::MixedFields);
        }
        let Some(first) = raw.iter().find(|s| !s.is_zero()) else {
            return Err(Error::ZeroPoint);
        };
        let inv = first.inv().expect("nonzero scalar");
        Ok(ProjectivePoint {
            coords: raw.iter().map(|s| s.mul(&inv)).collect(),
        })
    }

    pub fn from_integers(field: FieldSpec, raw: &[i64]) -> Result<ProjectivePoint> {
        Self::new(
            field,
            raw.iter()
                .map(|&x| Scalar::from_integer(field, x))
                .collect(),
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.coords[0].field()
    }

    /// Ambient dimension `n` (the point has `n+1` coordinates).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite list of pairwise distinct projective points with multiplicities;
/// the support of a fat-point scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    field: FieldSpec,
    ambient: usize,
    points: Vec<ProjectivePoint>,
    multiplicities: Vec<u32>,
}

impl PointConfiguration {
    pub fn new(
        field: FieldSpec,
        ambient: usize,
        points: Vec<ProjectivePoint>,
        multiplicities: Vec<u32>,
    ) -> Result<PointConfiguration> {
        if points.len() != multiplicities.len() {
            return Err(Error::ShapeMismatch);
        }
        if multiplicities.contains(&0) {
            return Err(Error::ZeroMultiplicity);
        }
        for p in &points {
            if p.dim() != ambient {
                return Err(Error::AmbientMismatch);
            }
            if p.field() != field {
                return Err(Error::MixedFields);
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint);
                }
            }
        }
        Ok(PointConfiguration {
            field,
            ambient,
            points,
            multiplicities,
        })
    }

    /// Configuration of simple (multiplicity-1) points.
    pub fn simple(
        field: FieldSpec,
        ambient: usize,
        points: Vec<ProjectivePoint>,
    ) -> Result<PointConfiguration> {
        let mults = vec![1; points.len()];
        Self::new(field, ambient, points, mults)
    }

    pub fn empty(field: FieldSpec, ambient: usize) -> PointConfiguration {
        PointConfiguration {
            field,
            ambient,
            points: Vec::new(),
            multiplicities: Vec::new(),
        }
    }

    /// Same support, every multiplicity replaced by `t`.
    pub fn with_uniform_multiplicity(&self, t: u32) -> PointConfiguration {
        assert!(t >= 1, "multiplicity must be >= 1");
        PointConfiguration {
            field: self.field,
            ambient: self.ambient,
            points: self.points.clone(),
            multiplicities: vec![t; self.points.len()],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }
}

/// `C(n, k)` as an exact integer; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All exponent vectors of total degree `d` in `n+1` variables, in graded-lex
/// order: `(d, 0, ..., 0)` first, lexicographically decreasing. The list has
/// `C(d+n, n)` entries.
pub fn monomials(n: usize, d: u32) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n + 1];
    fill_monomials(n, d, 0, &mut current, &mut out);
    out
}

fn fill_monomials(
    n: usize,
    remaining: u32,
    pos: usize,
    current: &mut ExponentVector,
    out: &mut Vec<ExponentVector>,
) {
    if pos == n {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_monomials(n, remaining - e, pos + 1, current, out);
    }
    current[pos] = 0;
}

/// Graded-lex comparison: lower degree first; within a degree the
/// lexicographically larger exponent vector comes first.
pub fn graded_lex_cmp(a: &ExponentVector, b: &ExponentVector) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// Evaluates the Hasse derivative `D^(b) x^a` at `P`:
/// `prod_i C(a_i, b_i) P_i^{a_i - b_i}`, which is 0 whenever some
/// `b_i > a_i`. Divided-power derivatives keep order-of-vanishing conditions
/// meaningful in positive characteristic, where iterated partials degenerate.
pub fn hasse_deriv_eval(a: &ExponentVector, b: &ExponentVector, p: &ProjectivePoint) -> Scalar {
    assert_eq!(a.len(), b.len(), "exponent length mismatch");
    assert_eq!(a.len(), p.coords().len(), "exponent/point length mismatch");
    let field = p.field();
    let mut acc = Scalar::one(field);
    for i in 0..a.len() {
        if b[i] > a[i] {
            return Scalar::zero(field);
        }
        let c = binomial(a[i] as u64, b[i] as u64);
        acc = acc.mul(&Scalar::from_bigint(field, &c));
        acc = acc.mul(&p.coords()[i].pow(a[i] - b[i]));
    }
    acc
}

/// Coordinate matrix of a set of points: the points' coordinate vectors as
/// columns of an `(n+1) x m` matrix.
fn coordinate_matrix(points: &[&ProjectivePoint]) -> ExactMatrix {
    let field = points[0].field();
    let n1 = points[0].coords().len();
    let rows = (0..n1)
        .map(|i| points.iter().map(|p| p.coords()[i].clone()).collect())
        .collect();
    ExactMatrix::from_rows(field, rows).expect("coordinate matrix shape")
}

/// True iff every subset of at most `n+1` of the points is linearly
/// independent. Errors: more than `n+2` points (unsupported size).
pub fn general_position(config: &PointConfiguration) -> Result<bool> {
    let n = config.ambient();
    let m = config.len();
    if m > n + 2 {
        return Err(Error::UnsupportedSize(m));
    }
    let size = m.min(n + 1);
    let points = config.points();
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let subset: Vec<&ProjectivePoint> = idx.iter().map(|&i| &points[i]).collect();
        if coordinate_matrix(&subset).rank() != size {
            return Ok(false);
        }
        // next combination of `size` indices out of m
        let mut i = size;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            if idx[i] != i + m - size {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The projective transformation carrying `m <= n+2` points in general
/// position to the standard frame: the first `m` of
/// `e_0, ..., e_n, (1, 1, ..., 1)`.
///
/// For `m <= n+1` the points are sent exactly to coordinate points, the
/// basis being completed with standard vectors; for `m = n+2` the classical
/// rescaling by the coefficients of the last point makes it land on
/// `(1, ..., 1)`.
pub fn pgl_standard_frame(config: &PointConfiguration) -> Result<ExactMatrix> {
    if !general_position(config)? {
        return Err(Error::NotInGeneralPosition);
    }
    let n = config.ambient();
    let m = config.len();
    let field = config.field();
    let points = config.points();

    let basis: Vec<Vec<Scalar>> = if m <= n + 1 {
        // columns: the m points, greedily completed by standard vectors
        let mut cols: Vec<Vec<Scalar>> = points.iter().map(|p| p.coords().to_vec()).collect();
        for j in 0..=n {
            if cols.len() == n + 1 {
                break;
            }
            let mut e = vec![Scalar::zero(field); n + 1];
            e[j] = Scalar::one(field);
            let mut trial = cols.clone();
            trial.push(e.clone());
            let rows: Vec<Vec<Scalar>> = (0..=n)
                .map(|i| trial.iter().map(|c| c[i].clone()).collect())
                .collect();
            let mat = ExactMatrix::from_rows(field, rows)?;
            if mat.rank() == trial.len() {
                cols.push(e);
            }
        }
        debug_assert_eq!(cols.len(), n + 1, "general position guarantees completion");
        cols
    } else {
        // m = n+2: write the last point in the basis of the first n+1 and
        // scale each basis column by the corresponding coefficient.
        let lead: Vec<&ProjectivePoint> = points[..n + 1].iter().collect();
        let a = coordinate_matrix(&lead);
        let rhs = points[n + 1].coords().to_vec();
        let coeffs = linalg::solve_square(&a, &rhs).ok_or(Error::NotInGeneralPosition)?;
        if coeffs.iter().any(Scalar::is_zero) {
            // cannot happen in general position; guard anyway
            return Err(Error::NotInGeneralPosition);
        }
        points[..n + 1]
            .iter()
            .zip(&coeffs)
            .map(|(p, c)| p.coords().iter().map(|x| x.mul(c)).collect())
            .collect()
    };

    let rows: Vec<Vec<Scalar>> = (0..=n)
        .map(|i| basis.iter().map(|c| c[i].clone()).collect())
        .collect();
    let b = ExactMatrix::from_rows(field, rows)?;
    linalg::invert(&b).ok_or(Error::NotInGeneralPosition)
}

/// Applies an invertible transform to every point of a configuration.
/// Errors: singular transform; shape or field mismatch.
pub fn apply_pgl(t: &ExactMatrix, config: &PointConfiguration) -> Result<PointConfiguration> {
    let n = config.ambient();
    if t.rows() != n + 1 || t.cols() != n + 1 {
        return Err(Error::ShapeMismatch);
    }
    if t.field() != config.field() {
        return Err(Error::MixedFields);
    }
    if t.rank() != n + 1 {
        return Err(Error::SingularTransform);
    }
    let points = config
        .points()
        .iter()
        .map(|p| ProjectivePoint::new(config.field(), t.apply(p.coords())))
        .collect::<Result<Vec<_>>>()?;
    PointConfiguration::new(config.field(), n, points, config.multiplicities().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn qp(raw: &[i64]) -> ProjectivePoint {
        ProjectivePoint::from_integers(FieldSpec::Rationals, raw).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(qp(&[0, 2, 4]), qp(&[0, 1, 2]));
        assert_eq!(
            qp(&[1, 1, 1]).coords()[2],
            Scalar::from_integer(FieldSpec::Rationals, 1)
        );
        let f5 = FieldSpec::prime(5).unwrap();
        let p = ProjectivePoint::from_integers(f5, &[3, 6, 9]).unwrap();
        let coords: Vec<u64> = p.coords().iter().map(|c| c.as_residue().unwrap()).collect();
        assert_eq!(coords, vec![1, 2, 3]);
        assert_eq!(
            ProjectivePoint::from_integers(FieldSpec::Rationals, &[0, 0, 0]),
            Err(Error::ZeroPoint)
        );
        // idempotent: re-normalizing a normalized point changes nothing
        let p = qp(&[3, 6, 9]);
        let again = ProjectivePoint::new(FieldSpec::Rationals, p.coords().to_vec()).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn monomial_bases() {
        assert_eq!(
            monomials(2, 1),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(monomials(2, 3).len(), 10);
        assert_eq!(monomials(2, 24).len(), 325);
        for d in 0..6 {
            let ms = monomials(2, d);
            assert!(ms
                .windows(2)
                .all(|w| graded_lex_cmp(&w[0], &w[1]) == std::cmp::Ordering::Less));
            assert!(ms.iter().all(|m| m.iter().sum::<u32>() == d));
        }
        assert_eq!(monomials(1, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn hasse_examples() {
        // order-zero derivative is plain evaluation
        let p = qp(&[1, 2, 3]);
        let v = hasse_deriv_eval(&vec![1, 1, 1], &vec![0, 0, 0], &p);
        assert_eq!(v, Scalar::from_integer(FieldSpec::Rationals, 6));

        let v = hasse_deriv_eval(&vec![2, 1, 0], &vec![2, 0, 0], &qp(&[1, 1, 1]));
        assert_eq!(v, Scalar::one(FieldSpec::Rationals));

        // b_i > a_i kills the term
        let v = hasse_deriv_eval(&vec![1, 0, 0], &vec![2, 0, 0], &p);
        assert!(v.is_zero());

        // Characteristic 3: C(3,1) = 3 vanishes, while the divided-power
        // top derivative C(3,3) = 1 survives — the reason Hasse derivatives
        // are used instead of iterated partials.
        let f3 = FieldSpec::prime(3).unwrap();
        let p3 = ProjectivePoint::from_integers(f3, &[1, 1, 1]).unwrap();
        assert!(hasse_deriv_eval(&vec![3, 0, 0], &vec![1, 0, 0], &p3).is_zero());
        assert!(hasse_deriv_eval(&vec![3, 0, 0], &vec![3, 0, 0], &p3).is_one());
    }

    #[test]
    fn taylor_hasse_identity() {
        // f(x + h) = sum_b D^(b) f(x) h^b for a dense cubic in 3 variables,
        // checked by exact evaluation at integer points.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let field = FieldSpec::Rationals;
        let basis = monomials(2, 3);
        for _ in 0..5 {
            let coeffs: Vec<Scalar> = basis
                .iter()
                .map(|_| Scalar::from_integer(field, rng.gen_range(-5..=5)))
                .collect();
            let x: Vec<i64> = (0..3).map(|_| rng.gen_range(-4..=4)).collect();
            let h: Vec<i64> = (0..3).map(|_| rng.gen_range(-4..=4)).collect();
            let eval = |pt: &[i64]| -> Scalar {
                let mut acc = Scalar::zero(field);
                for (a, c) in basis.iter().zip(&coeffs) {
                    let mut term = c.clone();
                    for i in 0..3 {
                        term = term.mul(&Scalar::from_integer(field, pt[i]).pow(a[i]));
                    }
                    acc = acc.add(&term);
                }
                acc
            };
            let lhs = eval(&[x[0] + h[0], x[1] + h[1], x[2] + h[2]]);

            // the Taylor point must be projectively usable: shift x to avoid 0
            let xp = match ProjectivePoint::from_integers(field, &x) {
                Ok(p) => p,
                Err(_) => continue, // x = 0: skip, hasse_deriv_eval needs a point
            };
            // hasse_deriv_eval normalizes the point; rescale accordingly:
            // if x got divided by its first nonzero coordinate c, then
            // D^b f(x) = c^{3-|b|} D^b f(x/c) by homogeneity.
            let c = x
                .iter()
                .find(|v| **v != 0)
                .map(|&v| Scalar::from_integer(field, v))
                .unwrap();
            let mut rhs = Scalar::zero(field);
            for db in 0..=3u32 {
                for b in monomials(2, db) {
                    // D^(b) f (x) = sum_a c_a * D^(b) x^a
                    let mut dval = Scalar::zero(field);
                    for (a, ca) in basis.iter().zip(&coeffs) {
                        dval = dval.add(&ca.mul(&hasse_deriv_eval(a, &b, &xp)));
                    }
                    dval = dval.mul(&c.pow(3 - db));
                    let mut hterm = Scalar::one(field);
                    for i in 0..3 {
                        hterm = hterm.mul(&Scalar::from_integer(field, h[i]).pow(b[i]));
                    }
                    rhs = rhs.add(&dval.mul(&hterm));
                }
            }
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn general_position_examples() {
        let field = FieldSpec::Rationals;
        let frame = PointConfiguration::simple(
            field,
            2,
            vec![qp(&[1, 0, 0]), qp(&[0, 1, 0]), qp(&[0, 0, 1])],
        )
        .unwrap();
        assert!(general_position(&frame).unwrap());

        let collinear = PointConfiguration::simple(
            field,
            2,
            vec![qp(&[1, 0, 0]), qp(&[0, 1, 0]), qp(&[1, 1, 0])],
        )
        .unwrap();
        assert!(!general_position(&collinear).unwrap());

        let four = PointConfiguration::simple(
            field,
            2,
            vec![
                qp(&[1, 0, 0]),
                qp(&[0, 1, 0]),
                qp(&[0, 0, 1]),
                qp(&[1, 1, 1]),
            ],
        )
        .unwrap();
        assert!(general_position(&four).unwrap());

        let five = PointConfiguration::simple(
            field,
            2,
            vec![
                qp(&[1, 0, 0]),
                qp(&[0, 1, 0]),
                qp(&[0, 0, 1]),
                qp(&[1, 1, 1]),
                qp(&[1, 2, 3]),
            ],
        )
        .unwrap();
        assert_eq!(general_position(&five), Err(Error::UnsupportedSize(5)));
    }

    #[test]
    fn standard_frame_identity_case() {
        let field = FieldSpec::Rationals;
        let config = PointConfiguration::simple(
            field,
            2,
            vec![
                qp(&[1, 0, 0]),
                qp(&[0, 1, 0]),
                qp(&[0, 0, 1]),
                qp(&[1, 1, 1]),
            ],
        )
        .unwrap();
        let t = pgl_standard_frame(&config).unwrap();
        assert_eq!(t, ExactMatrix::identity(field, 3));
    }

    #[test]
    fn standard_frame_two_points_in_p1() {
        let field = FieldSpec::Rationals;
        let config = PointConfiguration::simple(
            field,
            1,
            vec![
                ProjectivePoint::from_integers(field, &[2, 3]).unwrap(),
                ProjectivePoint::from_integers(field, &[1, -1]).unwrap(),
            ],
        )
        .unwrap();
        let t = pgl_standard_frame(&config).unwrap();
        let moved = apply_pgl(&t, &config).unwrap();
        assert_eq!(
            moved.points()[0],
            ProjectivePoint::from_integers(field, &[1, 0]).unwrap()
        );
        assert_eq!(
            moved.points()[1],
            ProjectivePoint::from_integers(field, &[0, 1]).unwrap()
        );
    }

    #[test]
    fn standard_frame_general_quadruple() {
        let field = FieldSpec::Rationals;
        let config = PointConfiguration::simple(
            field,
            2,
            vec![
                qp(&[1, 2, 3]),
                qp(&[-1, 1, 1]),
                qp(&[2, 0, 1]),
                qp(&[5, 1, -2]),
            ],
        )
        .unwrap();
        let t = pgl_standard_frame(&config).unwrap();
        let moved = apply_pgl(&t, &config).unwrap();
        assert_eq!(moved.points()[0], qp(&[1, 0, 0]));
        assert_eq!(moved.points()[1], qp(&[0, 1, 0]));
        assert_eq!(moved.points()[2], qp(&[0, 0, 1]));
        assert_eq!(moved.points()[3], qp(&[1, 1, 1]));
    }

    #[test]
    fn apply_pgl_examples() {
        let field = FieldSpec::Rationals;
        let config =
            PointConfiguration::simple(field, 2, vec![qp(&[1, 2, 3]), qp(&[0, 1, 4])]).unwrap();
        let id = ExactMatrix::identity(field, 3);
        assert_eq!(apply_pgl(&id, &config).unwrap(), config);

        // scalar matrices act trivially after normalization
        let two = Scalar::from_integer(field, 2);
        let scaled = ExactMatrix::from_rows(
            field,
            (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| {
                            if i == j {
                                two.clone()
                            } else {
                                Scalar::zero(field)
                            }
                        })
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(apply_pgl(&scaled, &config).unwrap(), config);

        // permutation matrix permutes coordinates
        let perm = ExactMatrix::from_rows(
            field,
            vec![
                vec![Scalar::zero(field), Scalar::one(field), Scalar::zero(field)],
                vec![Scalar::zero(field), Scalar::zero(field), Scalar::one(field)],
                vec![Scalar::one(field), Scalar::zero(field), Scalar::zero(field)],
            ],
        )
        .unwrap();
        let moved = apply_pgl(&perm, &config).unwrap();
        assert_eq!(moved.points()[0], qp(&[2, 3, 1]));

        // singular transform rejected
        let sing = ExactMatrix::zero(field, 3, 3);
        assert_eq!(apply_pgl(&sing, &config), Err(Error::SingularTransform));
    }

    #[test]
    fn apply_pgl_composes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let field = FieldSpec::Rationals;
        let config = PointConfiguration::simple(
            field,
            2,
            vec![qp(&[1, 2, 3]), qp(&[4, -1, 0]), qp(&[0, 0, 1])],
        )
        .unwrap();
        let mut random_invertible = || loop {
            let m = ExactMatrix::from_rows(
                field,
                (0..3)
                    .map(|_| {
                        (0..3)
                            .map(|_| Scalar::from_integer(field, rng.gen_range(-4..=4)))
                            .collect()
                    })
                    .collect(),
            )
            .unwrap();
            if m.rank() == 3 {
                return m;
            }
        };
        for _ in 0..5 {
            let t1 = random_invertible();
            let t2 = random_invertible();
            let lhs = apply_pgl(&t2, &apply_pgl(&t1, &config).unwrap()).unwrap();
            let rhs = apply_pgl(&t2.mat_mul(&t1), &config).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2).to_i64(), Some(10));
        assert_eq!(binomial(3, 0).to_i64(), Some(1));
        assert_eq!(binomial(2, 3).to_i64(), Some(0));
        assert_eq!(binomial(26, 2).to_i64(), Some(325));
    }

    #[test]
    fn configuration_validation() {
        let field = FieldSpec::Rationals;
        assert_eq!(
            PointConfiguration::simple(field, 2, vec![qp(&[1, 2, 3]), qp(&[2, 4, 6])]),
            Err(Error::DuplicatePoint)
        );
        assert_eq!(
            PointConfiguration::new(field, 2, vec![qp(&[1, 2, 3])], vec![0]),
            Err(Error::ZeroMultiplicity)
        );
        assert_eq!(
            PointConfiguration::simple(field, 1, vec![qp(&[1, 2, 3])]),
            Err(Error::AmbientMismatch)
        );
    }
}

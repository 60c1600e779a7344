//! Modular elimination and the certified rank/kernel engine for rational
//! matrices too large for fraction-free methods.
//!
//! Certification scheme: for a prime `p`, `rank_p(A) <= rank_Q(A)` always.
//! If RREF mod `p` reports full column rank, that lower bound already meets
//! the trivial upper bound and the rank is certified. Otherwise the mod-`p`
//! kernel is lifted `p`-adically (Hensel) against the exact integer matrix,
//! rational coordinates are recovered by Wang reconstruction, and every
//! candidate vector is verified to satisfy `A v = 0` exactly over `Z`. The
//! `k` verified independent kernel vectors force `rank_Q(A) <= cols - k`,
//! matching the mod-`p` lower bound `cols - k`, so the result is exact. A
//! prime that disagrees with the rational rank cannot pass verification; it
//! is detected (exact division failure or reconstruction budget exhaustion)
//! and the engine moves to the next prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

use crate::field::is_prime_u64;

// ---------------------------------------------------------------------------
// Montgomery arithmetic (odd modulus < 2^62)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
pub(crate) struct Mont {
    pub p: u64,
    ninv: u64, // -p^{-1} mod 2^64
    r2: u64,   // (2^64)^2 mod p
}

impl Mont {
    pub fn new(p: u64) -> Mont {
        debug_assert!(p % 2 == 1 && p < (1 << 62));
        let mut inv = 1u64; // p^{-1} mod 2^64 by Newton iteration
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((u128::from(u64::MAX) + 1) % u128::from(p)) as u64;
        let r2 = ((u128::from(r) * u128::from(r)) % u128::from(p)) as u64;
        Mont {
            p,
            ninv: inv.wrapping_neg(),
            r2,
        }
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.ninv);
        let s = ((t + u128::from(m) * u128::from(self.p)) >> 64) as u64;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(u128::from(a) * u128::from(b))
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    // self is the modulus context, not the value being converted
    #[inline]
    #[allow(clippy::wrong_self_convention)]
    pub fn to_mont(&self, a: u64) -> u64 {
        debug_assert!(a < self.p);
        self.redc(u128::from(a) * u128::from(self.r2))
    }

    #[inline]
    #[allow(clippy::wrong_self_convention)]
    pub fn from_mont(&self, a: u64) -> u64 {
        self.redc(u128::from(a))
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = self.to_mont(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(self.from_mont(a) != 0);
        self.pow(a, self.p - 2)
    }
}

// ---------------------------------------------------------------------------
// RREF mod p
// ---------------------------------------------------------------------------

struct Rref {
    rank: usize,
    pivots: Vec<usize>,
    /// original row index now sitting at each position
    row_origin: Vec<usize>,
    /// fully reduced matrix, Montgomery domain, row-major
    data: Vec<u64>,
}

fn rref(m: &Mont, rows: usize, cols: usize, mut data: Vec<u64>) -> Rref {
    let mut row_origin: Vec<usize> = (0..rows).collect();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        if pr != rank {
            for j in 0..cols {
                data.swap(pr * cols + j, rank * cols + j);
            }
            row_origin.swap(pr, rank);
        }
        let inv = m.inv(data[rank * cols + col]);
        for j in col..cols {
            data[rank * cols + j] = m.mul(data[rank * cols + j], inv);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = data[r * cols + col];
            if f == 0 {
                continue;
            }
            for j in col..cols {
                let t = m.mul(f, data[rank * cols + j]);
                data[r * cols + j] = m.sub(data[r * cols + j], t);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Rref {
        rank,
        pivots,
        row_origin,
        data,
    }
}

/// Rank and kernel basis over `F_p` (natural-domain input and output).
pub(crate) fn rank_nullspace_fp(
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
    p: u64,
) -> (usize, Vec<Vec<u64>>) {
    let m = Mont::new(p);
    let data: Vec<u64> = entries.into_iter().map(|x| m.to_mont(x)).collect();
    let r = rref(&m, rows, cols, data);
    let kernel = kernel_from_rref(&m, cols, &r);
    (r.rank, kernel)
}

/// Free-column kernel basis read off a reduced RREF; natural domain.
fn kernel_from_rref(m: &Mont, cols: usize, r: &Rref) -> Vec<Vec<u64>> {
    let free: Vec<usize> = (0..cols).filter(|c| !r.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &pc) in r.pivots.iter().enumerate() {
                let x = m.from_mont(r.data[i * cols + f]);
                v[pc] = if x == 0 { 0 } else { m.p - x };
            }
            v
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Certified rational rank / kernel
// ---------------------------------------------------------------------------

/// 62-bit primes used by the certified engine, largest first. 25 primes give
/// astronomically more retry headroom than any input can consume.
pub(crate) fn working_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut primes = Vec::with_capacity(25);
        let mut c = (1u64 << 62) - 1;
        while primes.len() < 25 {
            if is_prime_u64(c) {
                primes.push(c);
            }
            c -= 2;
        }
        primes
    })
}

pub(crate) fn rank_nullspace_int(
    int_rows: &[Vec<BigInt>],
    cols: usize,
) -> (usize, Vec<Vec<BigInt>>) {
    let rows = int_rows.len();
    if rows == 0 || cols == 0 {
        return (0, identity_kernel(cols));
    }
    for &p in working_primes() {
        let m = Mont::new(p);
        let pb = BigInt::from(p);
        let data: Vec<u64> = int_rows
            .iter()
            .flat_map(|row| {
                row.iter()
                    .map(|e| m.to_mont(e.mod_floor(&pb).to_u64().expect("residue")))
            })
            .collect();
        let r = rref(&m, rows, cols, data);
        if r.rank == cols {
            // Full column rank mod p certifies full rational column rank.
            return (cols, Vec::new());
        }
        if let Some(kernel) = hensel_certify(int_rows, cols, &m, &r) {
            return (cols - kernel.len(), kernel);
        }
        // p disagreed with the rational rank structure; retry.
    }
    unreachable!("rank certification failed for every working prime");
}

fn identity_kernel(cols: usize) -> Vec<Vec<BigInt>> {
    (0..cols)
        .map(|f| {
            let mut v = vec![BigInt::zero(); cols];
            v[f] = BigInt::one();
            v
        })
        .collect()
}

/// Lift the mod-p kernel until every vector reconstructs to a rational
/// vector that exactly annihilates the integer matrix. Returns the primitive
/// integer kernel basis, or `None` if `p` proves unusable.
fn hensel_certify(a: &[Vec<BigInt>], cols: usize, m: &Mont, r: &Rref) -> Option<Vec<Vec<BigInt>>> {
    let rows = a.len();
    let rank = r.rank;
    let p = m.p;
    let pb = BigInt::from(p);
    let pivots = &r.pivots;
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let k = free.len();
    let pivot_rows: Vec<usize> = r.row_origin[..rank].to_vec();

    // Inverse of the pivot minor A[pivot_rows, pivots] mod p.
    let inv = invert_mont(m, rank, |i, j| {
        a[pivot_rows[i]][pivots[j]].mod_floor(&pb).to_u64().unwrap()
    })?;

    // V: kernel lifts (canonical residues); T = A*V / p^s, exact at all times.
    let mut v: Vec<Vec<BigInt>> = kernel_from_rref(m, cols, r)
        .into_iter()
        .map(|vv| vv.into_iter().map(BigInt::from).collect())
        .collect();
    debug_assert_eq!(v.len(), k);
    let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); k]; rows];
    for i in 0..rows {
        for (h, vh) in v.iter().enumerate() {
            let mut acc = BigInt::zero();
            for (j, e) in a[i].iter().enumerate() {
                if !vh[j].is_zero() && !e.is_zero() {
                    acc += e * &vh[j];
                }
            }
            let (q, rem) = acc.div_mod_floor(&pb);
            debug_assert!(rem.is_zero(), "mod-p kernel must annihilate mod p");
            if !rem.is_zero() {
                return None;
            }
            t[i][h] = q;
        }
    }

    let s_max = max_lift_steps(a, &pivot_rows, cols, p);
    let mut pw = pb.clone(); // p^s, current certified precision
    let mut next_attempt = 2usize;
    for s in 1..=s_max {
        if s >= next_attempt || s == s_max {
            next_attempt = (s * 13) / 10 + 1;
            if let Some(kernel) = try_reconstruct(a, &v, &free, pivots, &pw) {
                return Some(kernel);
            }
        }
        if s == s_max {
            break;
        }

        // Correction step: delta = -INV * (T at pivot rows) mod p.
        let mut delta = vec![vec![0u64; k]; rank];
        for h in 0..k {
            let u: Vec<u64> = pivot_rows
                .iter()
                .map(|&pr| m.to_mont(t[pr][h].mod_floor(&pb).to_u64().unwrap()))
                .collect();
            for i in 0..rank {
                let mut acc = 0u64;
                for (j, &uj) in u.iter().enumerate() {
                    if uj != 0 {
                        acc = m.add(acc, m.mul(inv[i * rank + j], uj));
                    }
                }
                let nat = m.from_mont(acc);
                delta[i][h] = if nat == 0 { 0 } else { p - nat };
            }
        }

        // V += p^s * delta (pivot coordinates only); T = (T + A_P*delta)/p.
        for h in 0..k {
            for (i, &pc) in pivots.iter().enumerate() {
                if delta[i][h] != 0 {
                    v[h][pc] += &pw * BigInt::from(delta[i][h]);
                }
            }
        }
        for (i, arow) in a.iter().enumerate() {
            for h in 0..k {
                let mut acc = t[i][h].clone();
                for (c, &pc) in pivots.iter().enumerate() {
                    let d = delta[c][h];
                    if d != 0 && !arow[pc].is_zero() {
                        acc += &arow[pc] * BigInt::from(d);
                    }
                }
                let (q, rem) = acc.div_mod_floor(&pb);
                if !rem.is_zero() {
                    return None; // p-adic solution does not exist: bad prime
                }
                t[i][h] = q;
            }
        }
        pw *= &pb;
    }
    None
}

/// Gauss-Jordan inverse of an n x n system given by a natural-domain entry
/// callback; result row-major in Montgomery domain.
fn invert_mont(m: &Mont, n: usize, entry: impl Fn(usize, usize) -> u64) -> Option<Vec<u64>> {
    let one = m.to_mont(1);
    let mut a = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = m.to_mont(entry(i, j));
        }
    }
    let mut inv = vec![0u64; n * n];
    for i in 0..n {
        inv[i * n + i] = one;
    }
    for col in 0..n {
        let pr = (col..n).find(|&r| a[r * n + col] != 0)?;
        if pr != col {
            for j in 0..n {
                a.swap(pr * n + j, col * n + j);
                inv.swap(pr * n + j, col * n + j);
            }
        }
        let s = m.inv(a[col * n + col]);
        for j in 0..n {
            a[col * n + j] = m.mul(a[col * n + j], s);
            inv[col * n + j] = m.mul(inv[col * n + j], s);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r * n + col];
            if f == 0 {
                continue;
            }
            for j in 0..n {
                let t = m.mul(f, a[col * n + j]);
                a[r * n + j] = m.sub(a[r * n + j], t);
                let t = m.mul(f, inv[col * n + j]);
                inv[r * n + j] = m.sub(inv[r * n + j], t);
            }
        }
    }
    Some(inv)
}

/// Hadamard-style bound on the number of lifting steps: kernel coordinates
/// are quotients of minors of A, so once p^s exceeds twice the squared minor
/// bound, Wang reconstruction must succeed for a good prime.
fn max_lift_steps(a: &[Vec<BigInt>], pivot_rows: &[usize], cols: usize, p: u64) -> usize {
    let ln2 = std::f64::consts::LN_2;
    let mut ln_b = 0.0f64;
    for &i in pivot_rows {
        let max_bits = a[i].iter().map(|e| e.bits()).max().unwrap_or(1).max(1);
        ln_b += 0.5 * (cols as f64).ln() + (max_bits as f64) * ln2;
    }
    let steps = (2.0 * ln_b + ln2) / (p as f64).ln();
    steps.ceil() as usize + 3
}

fn try_reconstruct(
    a: &[Vec<BigInt>],
    v: &[Vec<BigInt>],
    free: &[usize],
    pivots: &[usize],
    modulus: &BigInt,
) -> Option<Vec<Vec<BigInt>>> {
    let threshold = (modulus / BigInt::from(2)).sqrt();
    let mut out = Vec::with_capacity(v.len());
    for (h, vh) in v.iter().enumerate() {
        let mut dens = BigInt::one();
        let mut fracs: Vec<(usize, BigInt, BigInt)> = Vec::with_capacity(pivots.len());
        for &pc in pivots {
            let (num, den) = wang(&vh[pc], modulus, &threshold)?;
            dens = num_integer::lcm(dens, den.clone());
            fracs.push((pc, num, den));
        }
        let mut w = vec![BigInt::zero(); vh.len()];
        w[free[h]] = dens.clone();
        for (pc, num, den) in fracs {
            w[pc] = num * (&dens / den);
        }
        // Exact verification over Z: this is what certifies the rank.
        for arow in a {
            let mut acc = BigInt::zero();
            for (j, e) in arow.iter().enumerate() {
                if !w[j].is_zero() && !e.is_zero() {
                    acc += e * &w[j];
                }
            }
            if !acc.is_zero() {
                return None;
            }
        }
        super::normalize_primitive(&mut w);
        out.push(w);
    }
    Some(out)
}

/// Wang rational reconstruction: find a/b with x*b = a mod M and
/// |a|, b <= sqrt(M/2). Returns (a, b) with b > 0.
fn wang(x: &BigInt, modulus: &BigInt, threshold: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (modulus.clone(), x.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > threshold {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *threshold {
        return None;
    }
    if t1.is_negative() {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

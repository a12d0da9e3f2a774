//! Hecke eigenvalue systems modulo p.
//!
//! The characteristic polynomial of T_2 mod p is factored by exhaustive root
//! search in F_p and F_{p²}; each simple root determines a one-dimensional
//! eigenspace on which every T_ℓ acts by its eigenvalue. Repeated roots are
//! rejected: the instances this crate exists for are all semisimple with
//! distinct roots, and generalized eigenspaces are deliberately out of
//! scope.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use super::basis::{dim_cusp, victor_miller_basis};
use super::fp::{Fp2, Pair};
use super::hecke::{hecke_matrix, hecke_matrix_auto};
use super::QSeriesError;
use crate::arith::{is_prime, primes_up_to};

/// An eigenvalue in F_p or F_{p²}, as coordinates w.r.t. the basis {1, x}
/// of F_p[x]/(x² - r). Prime-field values have `c1 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct FqValue {
    pub c0: u64,
    pub c1: u64,
}

impl FqValue {
    pub fn from_pair(p: Pair) -> Self {
        FqValue { c0: p[0], c1: p[1] }
    }

    pub fn pair(&self) -> Pair {
        [self.c0, self.c1]
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }
}

/// One Hecke eigensystem at (p, k): the map ℓ → a_ℓ mod p for primes ℓ up
/// to a bound.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EigenSystem {
    pub weight: u64,
    pub prime: u64,
    /// 1 when all eigenvalues lie in F_p, 2 otherwise.
    pub residue_degree: u8,
    /// The non-residue r with F_{p²} = F_p[x]/(x² - r), recorded whenever
    /// the residue degree is 2 so values are reproducible bit-exactly.
    pub nonresidue: Option<u64>,
    eigenvalues: Vec<(u64, FqValue)>,
}

impl EigenSystem {
    /// Eigenvalue of T_ℓ, when ℓ was within the computed bound.
    pub fn a(&self, ell: u64) -> Option<FqValue> {
        self.eigenvalues
            .binary_search_by_key(&ell, |(l, _)| *l)
            .ok()
            .map(|i| self.eigenvalues[i].1)
    }

    /// The a_p entry (the T_p eigenvalue of this system).
    pub fn ap(&self) -> Option<FqValue> {
        self.a(self.prime)
    }

    pub fn ap_is_zero(&self) -> Option<bool> {
        self.ap().map(|v| v.is_zero())
    }

    /// All recorded (ℓ, a_ℓ) pairs, sorted by ℓ.
    pub fn eigenvalues(&self) -> &[(u64, FqValue)] {
        &self.eigenvalues
    }
}

fn poly_eval(ctx: &Fp2, poly: &[Pair], x: Pair) -> Pair {
    let mut acc = ctx.zero();
    for c in poly.iter().rev() {
        acc = ctx.add(ctx.mul(acc, x), *c);
    }
    acc
}

/// Divides a monic-leading polynomial by (X - root); the remainder must be
/// zero, which the caller guarantees by evaluating first.
fn poly_deflate(ctx: &Fp2, poly: &[Pair], root: Pair) -> Vec<Pair> {
    let n = poly.len() - 1;
    let mut quot = alloc::vec![ctx.zero(); n];
    let mut carry = ctx.zero();
    for i in (0..n).rev() {
        carry = ctx.add(poly[i + 1], ctx.mul(carry, root));
        quot[i] = carry;
    }
    debug_assert!(ctx.is_zero(ctx.add(poly[0], ctx.mul(carry, root))));
    quot
}

/// All roots of the monic polynomial in F_{p²}, or a semisimplicity /
/// supportability error. Roots come back sorted: prime-field roots first.
fn distinct_roots(
    ctx: &Fp2,
    poly_mod: &[u64],
    weight: u64,
) -> Result<Vec<Pair>, QSeriesError> {
    let p = ctx.p;
    let mut poly: Vec<Pair> = poly_mod.iter().map(|&c| ctx.embed(c)).collect();
    let mut roots: Vec<Pair> = Vec::new();

    // Prime-field roots by scanning F_p.
    for c0 in 0..p {
        let cand = [c0, 0];
        if ctx.is_zero(poly_eval(ctx, &poly, cand)) {
            roots.push(cand);
            poly = poly_deflate(ctx, &poly, cand);
            if ctx.is_zero(poly_eval(ctx, &poly, cand)) {
                return Err(QSeriesError::NonSemisimple { weight, prime: p });
            }
        }
    }

    let remaining = poly.len() - 1;
    if remaining == 0 {
        return Ok(roots);
    }
    if remaining == 2 {
        // Quadratic formula; the discriminant is a prime-field value.
        let b = poly[1];
        let c = poly[0];
        debug_assert!(b[1] == 0 && c[1] == 0);
        let disc = super::fp::sub_mod(
            super::fp::mul_mod(b[0], b[0], p),
            super::fp::mul_mod(4 % p, c[0], p),
            p,
        );
        if disc == 0 {
            return Err(QSeriesError::NonSemisimple { weight, prime: p });
        }
        let s = ctx.sqrt_of_base(disc);
        let half = ctx.embed(super::fp::inv_mod(2 % p, p));
        let minus_b = ctx.neg(b);
        let mut pair = [
            ctx.mul(ctx.add(minus_b, s), half),
            ctx.mul(ctx.sub(minus_b, s), half),
        ];
        pair.sort_unstable();
        roots.extend_from_slice(&pair);
        return Ok(roots);
    }
    // Higher remaining degree: exhaustive search over F_{p²} \ F_p, guarded
    // to desk scale.
    if (p as u128) * (p as u128) > 4_000_000 {
        return Err(QSeriesError::UnsupportedInstance {
            what: alloc::format!(
                "char poly of T_2 has an F_p-irreducible factor of degree {} at p = {}; \
                 exhaustive F_(p^2) search exceeds desk scale",
                remaining,
                p
            ),
        });
    }
    let mut extension_roots: Vec<Pair> = Vec::new();
    for c0 in 0..p {
        for c1 in 1..p {
            let cand = [c0, c1];
            if ctx.is_zero(poly_eval(ctx, &poly, cand)) {
                extension_roots.push(cand);
            }
        }
    }
    extension_roots.sort_unstable();
    for root in &extension_roots {
        if !ctx.is_zero(poly_eval(ctx, &poly, *root)) {
            // Already divided out: repeated root.
            return Err(QSeriesError::NonSemisimple { weight, prime: p });
        }
        poly = poly_deflate(ctx, &poly, *root);
    }
    if poly.len() > 1 {
        return Err(QSeriesError::UnsupportedInstance {
            what: alloc::format!(
                "an eigenvalue of T_2 at p = {} lies outside F_(p^2)",
                p
            ),
        });
    }
    roots.extend(extension_roots);
    Ok(roots)
}

/// Kernel vector of (M - λI), normalised so its first nonzero coordinate
/// is 1. The caller guarantees λ is a simple eigenvalue, so the kernel is
/// one-dimensional.
fn eigenvector(ctx: &Fp2, matrix: &[Vec<u64>], lambda: Pair) -> Vec<Pair> {
    let n = matrix.len();
    let mut m: Vec<Vec<Pair>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = ctx.embed(matrix[i][j]);
                    if i == j {
                        e = ctx.sub(e, lambda);
                    }
                    e
                })
                .collect()
        })
        .collect();
    // Row echelon with recorded pivot columns.
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| !ctx.is_zero(m[r][col])) else {
            continue;
        };
        m.swap(row, pr);
        let inv = ctx.inv(m[row][col]);
        for c in col..n {
            m[row][c] = ctx.mul(m[row][c], inv);
        }
        for r in 0..n {
            if r != row && !ctx.is_zero(m[r][col]) {
                let factor = m[r][col];
                for c in col..n {
                    let t = ctx.mul(factor, m[row][c]);
                    m[r][c] = ctx.sub(m[r][c], t);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let free_col = (0..n)
        .find(|c| !pivot_cols.contains(c))
        .expect("a simple eigenvalue leaves one free column");
    let mut v = alloc::vec![ctx.zero(); n];
    v[free_col] = ctx.one();
    for (r, &pc) in pivot_cols.iter().enumerate() {
        // Reduced echelon: pivot row r reads x_pc + m[r][free] x_free = 0.
        v[pc] = ctx.neg(m[r][free_col]);
    }
    // Normalise on the first nonzero coordinate.
    let lead = v
        .iter()
        .position(|c| !ctx.is_zero(*c))
        .expect("eigenvector is nonzero");
    let inv = ctx.inv(v[lead]);
    for c in v.iter_mut() {
        *c = ctx.mul(*c, inv);
    }
    v
}

fn reduce_matrix(entries: &[Vec<BigInt>], p: u64) -> Vec<Vec<u64>> {
    let pb = BigInt::from(p);
    entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| {
                    let mut r = c % &pb;
                    if r.is_negative() {
                        r += &pb;
                    }
                    u64::try_from(r).expect("residue fits u64")
                })
                .collect()
        })
        .collect()
}

/// All Hecke eigensystems of S_k mod p, with a_ℓ recorded for every prime
/// ℓ ≤ `ell_bound`.
pub fn eigensystems_mod_p(
    k: u64,
    p: u64,
    ell_bound: u64,
) -> Result<Vec<EigenSystem>, QSeriesError> {
    if !is_prime(p) {
        return Err(QSeriesError::NotPrime { n: p });
    }
    if p == 2 {
        return Err(QSeriesError::UnsupportedInstance {
            what: alloc::string::String::from("p = 2 needs a different quadratic extension model"),
        });
    }
    if ell_bound < 2 {
        return Err(QSeriesError::InvalidBound { given: ell_bound });
    }
    let dim = dim_cusp(k);
    if dim == 0 {
        return Ok(Vec::new());
    }
    let primes = primes_up_to(ell_bound);
    let ell_max = *primes.last().expect("bound >= 2 gives at least one prime");
    let precision = dim * ell_max as usize + 1;
    let basis = victor_miller_basis(k, precision)?;

    let t2 = hecke_matrix(k, 2, &basis)?;
    let char_poly = t2.char_poly();
    let poly_mod: Vec<u64> = {
        let pb = BigInt::from(p);
        char_poly
            .iter()
            .map(|c| {
                let mut r = c % &pb;
                if r.is_negative() {
                    r += &pb;
                }
                u64::try_from(r).expect("residue fits u64")
            })
            .collect()
    };

    let ctx = Fp2::new(p);
    let roots = distinct_roots(&ctx, &poly_mod, k)?;
    debug_assert_eq!(roots.len(), dim);

    let m2 = reduce_matrix(t2.entries(), p);
    let vectors: Vec<Vec<Pair>> = roots.iter().map(|&l| eigenvector(&ctx, &m2, l)).collect();
    let pivots: Vec<usize> = vectors
        .iter()
        .map(|v| v.iter().position(|c| !ctx.is_zero(*c)).expect("nonzero"))
        .collect();

    let mut systems: Vec<Vec<(u64, FqValue)>> = alloc::vec![Vec::new(); roots.len()];
    for &ell in &primes {
        let t_ell = hecke_matrix(k, ell, &basis)?;
        let m_ell = reduce_matrix(t_ell.entries(), p);
        for (s, v) in vectors.iter().enumerate() {
            let mut w = alloc::vec![ctx.zero(); dim];
            for i in 0..dim {
                for j in 0..dim {
                    let t = ctx.mul(ctx.embed(m_ell[i][j]), v[j]);
                    w[i] = ctx.add(w[i], t);
                }
            }
            let a = w[pivots[s]];
            debug_assert!((0..dim).all(|i| w[i] == ctx.mul(a, v[i])));
            systems[s].push((ell, FqValue::from_pair(a)));
        }
    }

    Ok(roots
        .iter()
        .zip(systems)
        .map(|(root, eigenvalues)| {
            let degree2 =
                root[1] != 0 || eigenvalues.iter().any(|(_, a)| a.c1 != 0);
            EigenSystem {
                weight: k,
                prime: p,
                residue_degree: if degree2 { 2 } else { 1 },
                nonresidue: if degree2 { Some(ctx.r) } else { None },
                eigenvalues,
            }
        })
        .collect())
}

/// True iff some eigensystem at (p, k) has a_p ≡ 0 mod p, detected as
/// det(T_p) ≡ 0 mod p (the a_p over all systems are exactly the mod-p
/// eigenvalues of T_p).
pub fn ap_zero_detect(k: u64, p: u64) -> Result<bool, QSeriesError> {
    if !is_prime(p) {
        return Err(QSeriesError::NotPrime { n: p });
    }
    if dim_cusp(k) == 0 {
        return Ok(false);
    }
    Ok(hecke_matrix_auto(k, p)?.det_mod(p) == 0)
}

//! Closed-form face counts, f/h transforms, generalized Narayana numbers and
//! the Macaulay M-sequence test, all in exact integer arithmetic.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::params::{ComplexParams, Family};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k.min(n - k)))
}

fn binomial_big(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for j in 0..k {
        acc *= n - BigUint::from(j);
        acc /= BigUint::from(j + 1);
    }
    acc
}

fn exact_div(numerator: BigUint, denominator: u64) -> Result<BigUint> {
    let (q, r) = numerator.div_rem(&BigUint::from(denominator));
    if !r.is_zero() {
        return Err(Error::NonIntegral { numerator: numerator.to_string(), denominator: denominator.to_string() });
    }
    Ok(q)
}

fn check_range(i: u32, lo: u32, hi: u32) -> Result<()> {
    if i < lo || i > hi {
        return Err(Error::Domain { index: i as i64, range: format!("{lo}..={hi}") });
    }
    Ok(())
}

/// Number of m-divisible dissections of an (mn+2)-gon with `i` diagonals:
/// `(1/n) C(mn+i+1, i) C(n, i+1)`.
pub fn f_a(m: u32, n: u32, i: u32) -> Result<BigUint> {
    ComplexParams::a(m, n)?;
    check_range(i, 0, n - 1)?;
    let (m, n, i) = (m as u64, n as u64, i as u64);
    exact_div(binomial(m * n + i + 1, i) * binomial(n, i + 1), n)
}

/// Number of faces of Δ^m_{B_n} with `i` B-diagonals: `C(mn+i, i) C(n, i)`.
pub fn f_b(m: u32, n: u32, i: u32) -> Result<BigUint> {
    ComplexParams::b(m, n)?;
    check_range(i, 0, n)?;
    let (m, n, i) = (m as u64, n as u64, i as u64);
    Ok(binomial(m * n + i, i) * binomial(n, i))
}

/// Faces of cardinality `i` in Δ^m_W, by the closed forms.
pub fn face_count(params: &ComplexParams, i: u32) -> Result<BigUint> {
    match params.family() {
        Family::A => f_a(params.m(), params.n(), i),
        Family::B => f_b(params.m(), params.n(), i),
    }
}

/// Number of faces of Δ^m_{B_n} with `i` diagonals that contain a diameter:
/// `C(mn+i, i) C(n-1, i-1)`.
pub fn diameter_count(m: u32, n: u32, i: u32) -> Result<BigUint> {
    ComplexParams::b(m, n)?;
    check_range(i, 1, n)?;
    let (m, n, i) = (m as u64, n as u64, i as u64);
    Ok(binomial(m * n + i, i) * binomial(n - 1, i - 1))
}

/// `(f_{-1}, f_0, ..., f_{d-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector(Vec<BigInt>);

/// `(h_0, ..., h_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HVector(Vec<BigInt>);

macro_rules! vector_common {
    ($t:ident) => {
        impl $t {
            pub fn new(entries: Vec<BigInt>) -> Self {
                assert!(!entries.is_empty(), "{} needs at least one entry", stringify!($t));
                $t(entries)
            }

            pub fn from_u64(entries: &[u64]) -> Self {
                Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
            }

            pub fn entries(&self) -> &[BigInt] {
                &self.0
            }

            /// The facet cardinality `d`.
            pub fn d(&self) -> usize {
                self.0.len() - 1
            }
        }

        impl std::fmt::Display for $t {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str("(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    };
}

vector_common!(FVector);
vector_common!(HVector);

fn signed_binomial(n: usize, k: usize) -> BigInt {
    BigInt::from(binomial(n as u64, k as u64))
}

/// `h_k = Σ_{i<=k} (-1)^{k-i} C(d-i, d-k) f_{i-1}`.
pub fn h_from_f(f: &FVector) -> HVector {
    let d = f.d();
    let h = (0..=d)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, i| {
                let term = signed_binomial(d - i, d - k) * &f.0[i];
                if (k - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    HVector(h)
}

/// `f_{k-1} = Σ_{i<=k} h_i C(d-i, k-i)`.
pub fn f_from_h(h: &HVector) -> FVector {
    let d = h.d();
    let f =
        (0..=d).map(|k| (0..=k).fold(BigInt::zero(), |acc, i| acc + signed_binomial(d - i, k - i) * &h.0[i])).collect();
    FVector(f)
}

/// The closed-form f-vector of Δ^m_W.
pub fn closed_form_f(params: &ComplexParams) -> Result<FVector> {
    let f = (0..=params.rank()).map(|i| face_count(params, i).map(BigInt::from)).collect::<Result<_>>()?;
    Ok(FVector(f))
}

/// Generalized Narayana number N^m_W(i): `(1/(i+1)) C(n-1, i) C(mn, i)` for
/// A_{n-1}, `C(n, i) C(mn, i)` for B_n.
pub fn narayana(params: &ComplexParams, i: u32) -> Result<BigUint> {
    check_range(i, 0, params.rank())?;
    let (m, n, i) = (params.m() as u64, params.n() as u64, i as u64);
    match params.family() {
        Family::A => exact_div(binomial(n - 1, i) * binomial(m * n, i), i + 1),
        Family::B => Ok(binomial(n, i) * binomial(m * n, i)),
    }
}

pub fn narayana_vector(params: &ComplexParams) -> Result<HVector> {
    let h = (0..=params.rank()).map(|i| narayana(params, i).map(BigInt::from)).collect::<Result<_>>()?;
    Ok(HVector(h))
}

/// Generalized Fuss–Catalan number: `(1/n) C(mn+n, n-1)` for A_{n-1},
/// `C(mn+n, n)` for B_n.
pub fn fuss_catalan(params: &ComplexParams) -> Result<BigUint> {
    let (m, n) = (params.m() as u64, params.n() as u64);
    match params.family() {
        Family::A => exact_div(binomial(m * n + n, n - 1), n),
        Family::B => Ok(binomial(m * n + n, n)),
    }
}

/// `-1 + f_0 - f_1 + ...`.
pub fn reduced_euler(f: &FVector) -> BigInt {
    f.0.iter().enumerate().fold(BigInt::zero(), |acc, (i, x)| if i % 2 == 0 { acc - x } else { acc + x })
}

/// The k-th Macaulay representation of `a`: pairs `(a_j, j)` for
/// `j = k, k-1, ...` with `a = Σ C(a_j, j)` and `a_k > a_{k-1} > ... >= j >= 1`.
pub fn macaulay_representation(a: &BigUint, k: u64) -> Vec<(BigUint, u64)> {
    assert!(k >= 1, "Macaulay representations start at k = 1");
    let mut rest = a.clone();
    let mut terms = Vec::new();
    let mut j = k;
    while !rest.is_zero() && j >= 1 {
        // Largest x with C(x, j) <= rest; C(j, j) = 1 <= rest.
        let mut lo = BigUint::from(j);
        let mut hi = BigUint::from(j + 1);
        while binomial_big(&hi, j) <= rest {
            lo = hi.clone();
            hi <<= 1;
        }
        while &hi - &lo > BigUint::one() {
            let mid: BigUint = (&lo + &hi) >> 1;
            if binomial_big(&mid, j) <= rest {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        rest -= binomial_big(&lo, j);
        terms.push((lo, j));
        j -= 1;
    }
    terms
}

/// Macaulay pseudo-power `a^<k>`: `Σ C(a_j + 1, j + 1)` over the k-th
/// representation.
pub fn pseudo_power(a: &BigUint, k: u64) -> BigUint {
    macaulay_representation(a, k).iter().map(|(top, j)| binomial_big(&(top + 1u32), j + 1)).sum()
}

/// True iff `h_0 = 1`, all entries are nonnegative and `h_{k+1} <= h_k^<k>`
/// for every `k >= 1`.
pub fn is_m_sequence(h: &[BigInt]) -> bool {
    if h.first() != Some(&BigInt::one()) || h.iter().any(|x| x.is_negative()) {
        return false;
    }
    let h: Vec<BigUint> = h.iter().map(|x| x.magnitude().clone()).collect();
    (1..h.len().saturating_sub(1)).all(|k| h[k + 1] <= pseudo_power(&h[k], k as u64))
}

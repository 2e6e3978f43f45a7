//! Principal specializations: rules assigning an exact rational function to
//! every power sum `p_n`, evaluation of symmetric functions under such
//! rules, and the closed product formulas they satisfy.

use std::collections::HashMap;

use num::rational::BigRational;
use num::One;

use super::SymFun;
use crate::exactalg::{RatFun, Sym};
use crate::partitions::Partition;

/// `<p_nu, p_nu> = z_nu prod_i (1 - q^{nu_i}) / (1 - t^{nu_i})`.
pub fn powersum_norm(nu: &Partition, qp: &RatFun, tp: &RatFun) -> RatFun {
    let mut acc = RatFun::rational(nu.z_factor());
    for &part in nu.parts() {
        let num = RatFun::one().sub(&qp.pow(part as i32).unwrap());
        let den = RatFun::one().sub(&tp.pow(part as i32).unwrap());
        acc = acc.mul(&num.div(&den).expect("scalar product weight"));
    }
    acc
}

/// Power of a monomial rational function by a half-unit exponent.
/// `half = 1` means the square root of `base`.
fn mono_half_pow(base: &RatFun, half: i64) -> RatFun {
    if half == 0 {
        return RatFun::one();
    }
    let p = base.as_laurent().expect("monomial base");
    assert!(p.is_monomial(), "specialization base must be a monomial");
    let (m, c) = p.leading().unwrap();
    let coeff = if half % 2 == 0 {
        let k = half / 2;
        let mut acc = BigRational::one();
        let kk = k.unsigned_abs() as usize;
        let base_c = if k >= 0 { c.clone() } else { c.recip() };
        for _ in 0..kk {
            acc *= &base_c;
        }
        acc
    } else {
        assert!(c.is_one(), "half powers need a unit coefficient");
        BigRational::one()
    };
    let pows: Vec<(Sym, i32)> = p
        .vars()
        .iter()
        .zip(m.0.iter())
        .map(|(&s, &e)| {
            let prod = e as i64 * half;
            assert!(prod % 2 == 0, "half power does not exist");
            (s, (prod / 2) as i32)
        })
        .collect();
    RatFun::monomial(coeff, &pows)
}

/// A rule assigning a rational function to every power sum `p_n`.
///
/// The principal rule realizes `p_n(c q^lambda t^rho, L t^{-rho})`:
/// `c^n sum_{i<=l(lambda)} (q^{n lambda_i} - 1) t^{n(1/2-i)}
///  + (c^n - L^n) / (t^{n/2} - t^{-n/2})`
/// over arbitrary monomial bases standing for `q` and `t`.
#[derive(Clone, Debug)]
pub enum Specialization {
    Principal {
        c: RatFun,
        lam: Partition,
        big_l: RatFun,
        qbase: RatFun,
        tbase: RatFun,
    },
    /// A finite alphabet: `p_n = sum_i a_i^n`.
    Finite(Vec<RatFun>),
    /// Alphabet union: `p_n = left.p_n + right.p_n`.
    Sum(Box<Specialization>, Box<Specialization>),
}

impl Specialization {
    /// `p_n(c q^lambda t^rho, L t^{-rho})` in the standard symbols.
    pub fn qt(c: RatFun, lam: Partition, big_l: RatFun) -> Self {
        Specialization::Principal {
            c,
            lam,
            big_l,
            qbase: RatFun::var(Sym::Q),
            tbase: RatFun::var(Sym::T),
        }
    }

    /// Same rule over arbitrary monomial bases.
    pub fn with_bases(c: RatFun, lam: Partition, big_l: RatFun, qbase: RatFun, tbase: RatFun) -> Self {
        Specialization::Principal { c, lam, big_l, qbase, tbase }
    }

    /// `p_n(t^rho) = 1/(t^{n/2} - t^{-n/2})`.
    pub fn t_rho() -> Self {
        Self::qt(RatFun::one(), Partition::empty(), RatFun::zero())
    }

    /// `p_n(t^{-rho}) = -1/(t^{n/2} - t^{-n/2})`.
    pub fn t_rho_neg() -> Self {
        Self::qt(RatFun::zero(), Partition::empty(), RatFun::one())
    }

    /// `p_n(q^rho)`.
    pub fn q_rho() -> Self {
        Self::with_bases(
            RatFun::one(),
            Partition::empty(),
            RatFun::zero(),
            RatFun::var(Sym::T),
            RatFun::var(Sym::Q),
        )
    }

    /// `p_n(q^{-rho})`.
    pub fn q_rho_neg() -> Self {
        Self::with_bases(
            RatFun::zero(),
            Partition::empty(),
            RatFun::one(),
            RatFun::var(Sym::T),
            RatFun::var(Sym::Q),
        )
    }

    /// The finite alphabet `{q^{lambda_i} t^{N + 1/2 - i}}_{1<=i<=N}` that
    /// realizes the substitution `Q = t^N` of `(Q q^lambda t^rho, t^{-rho})`.
    pub fn finite_qt_alphabet(lam: &Partition, n: usize) -> Self {
        let entries = (1..=n)
            .map(|i| {
                RatFun::monomial(
                    BigRational::one(),
                    &[
                        (Sym::Q, 2 * lam.part(i) as i32),
                        (Sym::T, 2 * n as i32 + 1 - 2 * i as i32),
                    ],
                )
            })
            .collect();
        Specialization::Finite(entries)
    }

    /// The alphabet `{q^{lambda_i + i - 1/2}}_{1<=i<=N}` (the `q = t` slice).
    pub fn finite_qq_alphabet(lam: &Partition, n: usize) -> Self {
        let entries = (1..=n)
            .map(|i| {
                RatFun::monomial(
                    BigRational::one(),
                    &[(Sym::Q, 2 * lam.part(i) as i32 + 2 * i as i32 - 1)],
                )
            })
            .collect();
        Specialization::Finite(entries)
    }

    pub fn sum(a: Specialization, b: Specialization) -> Self {
        Specialization::Sum(Box::new(a), Box::new(b))
    }

    /// The value of `p_n` under this rule.
    pub fn p_n(&self, n: u32) -> RatFun {
        match self {
            Specialization::Principal { c, lam, big_l, qbase, tbase } => {
                let n = n as i64;
                let cn = c.pow(n as i32).unwrap_or_else(|_| RatFun::zero());
                let mut acc = RatFun::zero();
                if !cn.is_zero() {
                    for (i, &part) in lam.parts().iter().enumerate() {
                        let i = i as i64 + 1;
                        let qpow = mono_half_pow(qbase, 2 * n * part as i64);
                        let tpow = mono_half_pow(tbase, n * (1 - 2 * i));
                        acc = acc.add(&qpow.sub(&RatFun::one()).mul(&tpow));
                    }
                    acc = acc.mul(&cn);
                }
                let ln = if big_l.is_zero() {
                    RatFun::zero()
                } else {
                    big_l.pow(n as i32).unwrap()
                };
                let den = mono_half_pow(tbase, n).sub(&mono_half_pow(tbase, -n));
                let tail = cn.sub(&ln).div(&den).expect("rho denominator");
                acc.add(&tail)
            }
            Specialization::Finite(entries) => {
                let mut acc = RatFun::zero();
                for a in entries {
                    acc = acc.add(&a.pow(n as i32).unwrap());
                }
                acc
            }
            Specialization::Sum(a, b) => a.p_n(n).add(&b.p_n(n)),
        }
    }
}

/// The paper-facing shape: `p_n(c q^lambda t^rho, L t^{-rho})`.
pub fn spec_powersum(n: u32, c: &RatFun, lam: &Partition, big_l: &RatFun) -> RatFun {
    Specialization::qt(c.clone(), lam.clone(), big_l.clone()).p_n(n)
}

/// Evaluates a symmetric function under a specialization rule by
/// substituting `p_n` values into its power-sum expansion.
pub fn eval_at_spec(f: &SymFun, spec: &Specialization) -> RatFun {
    let p = f.to_p();
    let mut cache: HashMap<u32, RatFun> = HashMap::new();
    let mut acc = RatFun::zero();
    for (nu, coeff) in p.coeffs() {
        let mut term = coeff.clone();
        for &part in nu.parts() {
            let v = cache
                .entry(part)
                .or_insert_with(|| spec.p_n(part))
                .clone();
            term = term.mul(&v);
        }
        acc = acc.add(&term);
    }
    acc
}

/// The closed product for `P_lambda(t^rho, L t^{-rho}; q, t)`:
/// `prod_{(i,j) in lambda} (-1) t^{1/2} q^{j-1}
///  (1 - L q^{1-j} t^{i-1}) / (1 - q^{lambda_i - j} t^{lambda^vee_j - i + 1})`.
pub fn principal_product(lam: &Partition, big_l: &RatFun, qs: Sym, ts: Sym) -> RatFun {
    let conj = lam.conjugate();
    let mut acc = RatFun::one();
    for (i, j) in lam.cells() {
        let head = RatFun::monomial(
            BigRational::one(),
            &[(ts, 1), (qs, 2 * (j as i32 - 1))],
        )
        .neg();
        let lfac = RatFun::one().sub(&big_l.mul(&RatFun::monomial(
            BigRational::one(),
            &[(qs, 2 * (1 - j as i32)), (ts, 2 * (i as i32 - 1))],
        )));
        let den = RatFun::one().sub(&RatFun::monomial(
            BigRational::one(),
            &[
                (qs, 2 * (lam.part(i) as i32 - j as i32)),
                (ts, 2 * (conj.part(j) as i32 - i as i32 + 1)),
            ],
        ));
        acc = acc.mul(&head.mul(&lfac).div(&den).expect("hook denominator"));
    }
    acc
}

/// The closed product for `P_lambda(t^rho; q, t) P_{lambda^vee}(q^rho; t, q)`:
/// `prod_cells (q/t)^{1/2} / ((1 - q^{-arm} t^{-leg-1})(1 - q^{arm+1} t^{leg}))`.
pub fn hook_pair_product(lam: &Partition, qs: Sym, ts: Sym) -> RatFun {
    let mut acc = RatFun::one();
    for (i, j) in lam.cells() {
        let (arm, leg, _, _) = lam.cell_stats(i, j).unwrap();
        let v = RatFun::monomial(BigRational::one(), &[(qs, 1), (ts, -1)]);
        let f1 = RatFun::one().sub(&RatFun::monomial(
            BigRational::one(),
            &[(qs, -2 * arm as i32), (ts, -2 * (leg as i32 + 1))],
        ));
        let f2 = RatFun::one().sub(&RatFun::monomial(
            BigRational::one(),
            &[(qs, 2 * (arm as i32 + 1)), (ts, 2 * leg as i32)],
        ));
        acc = acc.mul(&v.div(&f1.mul(&f2)).expect("hook pair denominator"));
    }
    acc
}

/// The framing factor `prod_{(i,j)} (-1) q^{lambda_i - j} t^{-lambda^vee_j + i}
/// = (-1)^{|lambda|} q^{n(lambda^vee)} t^{-n(lambda)}`.
pub fn gamma_qt(lam: &Partition, qs: Sym, ts: Sym) -> RatFun {
    let sign = if lam.size() % 2 == 0 { 1 } else { -1 };
    RatFun::monomial(
        BigRational::from(num::BigInt::from(sign)),
        &[
            (qs, 2 * lam.conjugate().n_stat() as i32),
            (ts, -2 * lam.n_stat() as i32),
        ],
    )
}

/// The `q = t` framing factor `(-1)^{|lambda|} q^{n(lambda^vee) - n(lambda)}`.
pub fn gamma_schur(lam: &Partition, qs: Sym) -> RatFun {
    let sign = if lam.size() % 2 == 0 { 1 } else { -1 };
    RatFun::monomial(
        BigRational::from(num::BigInt::from(sign)),
        &[(qs, 2 * (lam.conjugate().n_stat() - lam.n_stat()) as i32)],
    )
}

/// `e_r(t^rho) = prod_{i=1..r} t^{1/2} / (t^i - 1)`.
pub fn e_r_t_rho(r: u32) -> RatFun {
    let mut acc = RatFun::one();
    for i in 1..=r {
        let den = RatFun::half_power(Sym::T, 2 * i as i32).sub(&RatFun::one());
        acc = acc.mul(&RatFun::half_power(Sym::T, 1).div(&den).unwrap());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{qnum, Basis};

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e_r(r: u32) -> SymFun {
        SymFun::unit(Basis::Elementary, Partition::row(r))
    }

    #[test]
    fn spec_powersum_shapes() {
        // Empty lambda, c = 1, L = 0: p_n(t^rho) = 1/(t^{n/2} - t^{-n/2}).
        for n in 1..=4 {
            let v = spec_powersum(n, &RatFun::one(), &Partition::empty(), &RatFun::zero());
            let den = RatFun::half_power(Sym::T, n as i32)
                .sub(&RatFun::half_power(Sym::T, -(n as i32)));
            assert_eq!(v, RatFun::one().div(&den).unwrap());
        }
        // c = 1, L = t^{-N}: the N-variable power sum.
        let lam = pt(&[2, 1]);
        for n in 1..=3 {
            for nn in 2..=4usize {
                let v = spec_powersum(
                    n,
                    &RatFun::one(),
                    &lam,
                    &RatFun::half_power(Sym::T, -2 * nn as i32),
                );
                let mut expect = RatFun::zero();
                for i in 1..=nn {
                    expect = expect.add(&RatFun::monomial(
                        BigRational::one(),
                        &[
                            (Sym::Q, 2 * n as i32 * lam.part(i) as i32),
                            (Sym::T, n as i32 * (1 - 2 * i as i32)),
                        ],
                    ));
                }
                assert_eq!(v, expect, "n={n} N={nn}");
            }
        }
        // c = t^N, L = 1 matches the finite alphabet directly.
        for n in 1..=3 {
            for nn in 2..=4usize {
                let v = spec_powersum(
                    n,
                    &RatFun::half_power(Sym::T, 2 * nn as i32),
                    &lam,
                    &RatFun::one(),
                );
                let w = Specialization::finite_qt_alphabet(&lam, nn).p_n(n);
                assert_eq!(v, w, "n={n} N={nn}");
            }
        }
    }

    #[test]
    fn e_r_at_t_rho() {
        for r in 0..=4u32 {
            let lhs = eval_at_spec(&e_r(r), &Specialization::t_rho());
            assert_eq!(lhs, e_r_t_rho(r), "r = {r}");
        }
    }

    #[test]
    fn schur_vanishes_beyond_alphabet() {
        // s_lambda at an N-letter alphabet is zero when l(lambda) > N.
        let spec = Specialization::finite_qt_alphabet(&Partition::empty(), 2);
        let s = SymFun::unit(Basis::Schur, pt(&[1, 1, 1]));
        assert!(eval_at_spec(&s, &spec).is_zero());
        let s = SymFun::unit(Basis::Schur, pt(&[2, 1]));
        assert!(!eval_at_spec(&s, &spec).is_zero());
    }

    #[test]
    fn e_r_gaussian_binomial() {
        // t^{-r/2} e_r(t^{N+rho}, t^{-rho}) = t^{r(r-1)/2} [N r]_t.
        for nn in 0..=4u32 {
            for r in 0..=4u32 {
                let spec = Specialization::qt(
                    RatFun::half_power(Sym::T, 2 * nn as i32),
                    Partition::empty(),
                    RatFun::one(),
                );
                let lhs = RatFun::half_power(Sym::T, -(r as i32))
                    .mul(&eval_at_spec(&e_r(r), &spec));
                let rhs = RatFun::half_power(Sym::T, (r * r.saturating_sub(1)) as i32).mul(
                    &RatFun::from(qnum::qbinom(nn, r, &MultiLaurent::var(Sym::T))),
                );
                assert_eq!(lhs, rhs, "N={nn} r={r}");
            }
        }
    }

    #[test]
    fn alphabet_addition() {
        // sum_s e_{r-s}(x) e_s(y) = e_r(x, y) under specialization addition.
        let x = Specialization::qt(RatFun::var(Sym::BigQ), Partition::empty(), RatFun::zero());
        let y = Specialization::t_rho_neg();
        let both = Specialization::sum(x.clone(), y.clone());
        for r in 0..=4u32 {
            let mut lhs = RatFun::zero();
            for s in 0..=r {
                lhs = lhs.add(&eval_at_spec(&e_r(r - s), &x).mul(&eval_at_spec(&e_r(s), &y)));
            }
            let rhs = eval_at_spec(&e_r(r), &both);
            assert_eq!(lhs, rhs, "r = {r}");
        }
    }

    #[test]
    fn principal_product_matches_eval() {
        // Closed product vs direct evaluation of P_lambda at
        // p_n = (1 - L^n)/(t^{n/2} - t^{-n/2}), with L a fresh symbol (w).
        let big_l = RatFun::var(Sym::W);
        for lam in Partition::enumerate_up_to(4, None) {
            let closed = principal_product(&lam, &big_l, Sym::Q, Sym::T);
            let p = super::super::macdonald::macdonald_p(&lam, &super::super::params_qt());
            let spec = Specialization::qt(RatFun::one(), Partition::empty(), big_l.clone());
            let direct = eval_at_spec(&p, &spec);
            assert_eq!(closed, direct, "lambda = {lam}");
        }
    }

    #[test]
    fn principal_product_column_case() {
        // lambda = 1^r reduces to prod (-1) t^{1/2} (1 - L t^{i-1})/(1 - t^i).
        let big_l = RatFun::var(Sym::W);
        for r in 0..=4usize {
            let lam = Partition::column(r);
            let closed = principal_product(&lam, &big_l, Sym::Q, Sym::T);
            let mut expect = RatFun::one();
            for i in 1..=r {
                let num = RatFun::one().sub(&big_l.mul(&RatFun::half_power(
                    Sym::T,
                    2 * (i as i32 - 1),
                )));
                let den = RatFun::one().sub(&RatFun::half_power(Sym::T, 2 * i as i32));
                expect = expect.mul(
                    &RatFun::half_power(Sym::T, 1)
                        .neg()
                        .mul(&num.div(&den).unwrap()),
                );
            }
            assert_eq!(closed, expect, "r = {r}");
        }
    }

    #[test]
    fn hook_pair_product_matches_evals() {
        // Equals P_lambda(t^rho;q,t) * P_{lambda^vee}(q^rho;t,q), and the
        // parameter-inverted pair agrees too.
        for lam in Partition::enumerate_up_to(4, None) {
            let closed = hook_pair_product(&lam, Sym::Q, Sym::T);
            let p = super::super::macdonald::macdonald_p(&lam, &super::super::params_qt());
            let swapped = (RatFun::var(Sym::T), RatFun::var(Sym::Q));
            let pv = super::super::macdonald::macdonald_p(&lam.conjugate(), &swapped);
            let a = eval_at_spec(&p, &Specialization::t_rho());
            let b = eval_at_spec(&pv, &Specialization::q_rho());
            assert_eq!(closed, a.mul(&b), "lambda = {lam}");
            let a2 = eval_at_spec(&p, &Specialization::t_rho_neg());
            let b2 = eval_at_spec(&pv, &Specialization::q_rho_neg());
            assert_eq!(closed, a2.mul(&b2), "inverted at {lam}");
        }
    }

    #[test]
    fn gamma_column() {
        // Gamma_{1^r} = (-1)^r t^{-r(r-1)/2}.
        for r in 0..=5usize {
            let g = gamma_qt(&Partition::column(r), Sym::Q, Sym::T);
            let sign = if r % 2 == 0 { 1 } else { -1 };
            let expect = RatFun::monomial(
                BigRational::from(num::BigInt::from(sign)),
                &[(Sym::T, -(r as i32) * (r as i32 - 1))],
            );
            assert_eq!(g, expect, "r = {r}");
        }
    }
}

//! Iterated constant-term extraction via truncated geometric expansion.
//!
//! A product of polynomial factors and truncated geometric series
//! `sum_{n=0}^{bound} u^n` is expanded as a Laurent polynomial and the
//! coefficient of `z^0` (simultaneously in all expansion variables) is
//! returned. Factors are multiplied in an order that closes out each
//! expansion variable as early as possible, and terms whose exponents can no
//! longer reach zero given the remaining factors are pruned on the fly.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::{One, Zero};
use smallvec::SmallVec;

use super::laurent::{Mono, MultiLaurent};
use super::sym::Sym;
use crate::error::{Error, Result};

/// One factor of the product to expand.
#[derive(Clone, Debug)]
pub enum Factor {
    /// An exact polynomial factor.
    Polynomial(MultiLaurent),
    /// `sum_{n=0}^{bound} (coeff * monomial)^n`; the monomial must have
    /// positive leading degree in the declared expansion-variable order.
    Geometric {
        coeff: BigRational,
        pows: Vec<(Sym, i32)>,
        bound: u32,
    },
}

/// A full expansion problem: the declared (ordered) expansion variables and
/// the factors of the product.
#[derive(Clone, Debug)]
pub struct ExpansionSpec {
    pub z_vars: Vec<Sym>,
    pub factors: Vec<Factor>,
}

impl ExpansionSpec {
    pub fn new(z_vars: Vec<Sym>) -> Self {
        ExpansionSpec { z_vars, factors: Vec::new() }
    }

    pub fn polynomial(&mut self, p: MultiLaurent) -> &mut Self {
        self.factors.push(Factor::Polynomial(p));
        self
    }

    pub fn geometric(&mut self, coeff: BigRational, pows: &[(Sym, i32)], bound: u32) -> &mut Self {
        self.factors.push(Factor::Geometric { coeff, pows: pows.to_vec(), bound });
        self
    }

    /// Returns a copy with every geometric bound raised by `delta`.
    pub fn with_raised_bounds(&self, delta: u32) -> Self {
        let mut out = self.clone();
        for f in &mut out.factors {
            if let Factor::Geometric { bound, .. } = f {
                *bound += delta;
            }
        }
        out
    }
}

/// Contribution range of a factor to the exponent of each expansion variable.
fn factor_range(f: &Factor, z_vars: &[Sym]) -> Vec<(i64, i64)> {
    match f {
        Factor::Polynomial(p) => z_vars
            .iter()
            .map(|&v| {
                let lo = p.min_exp(v).unwrap_or(0) as i64;
                let hi = p.max_exp(v).unwrap_or(0) as i64;
                (lo, hi)
            })
            .collect(),
        Factor::Geometric { pows, bound, .. } => z_vars
            .iter()
            .map(|&v| {
                let e = pows.iter().find(|(s, _)| *s == v).map_or(0, |&(_, e)| e) as i64;
                let far = e * *bound as i64;
                (far.min(0), far.max(0))
            })
            .collect(),
    }
}

fn min_z_index(f: &Factor, z_vars: &[Sym]) -> usize {
    let touches = |v: &Sym| match f {
        Factor::Polynomial(p) => p.vars().contains(v),
        Factor::Geometric { pows, .. } => pows.iter().any(|(s, e)| s == v && *e != 0),
    };
    z_vars
        .iter()
        .position(touches)
        .unwrap_or(usize::MAX)
}

struct Accumulator {
    z_idx: Vec<usize>, // positions of z_vars inside vars
    terms: BTreeMap<Mono, BigRational>,
}

impl Accumulator {
    fn insert(&mut self, exps: SmallVec<[i32; 8]>, c: BigRational, remaining: &[(i64, i64)]) {
        for (k, &i) in self.z_idx.iter().enumerate() {
            let e = exps[i] as i64;
            let (lo, hi) = remaining[k];
            if e + hi < 0 || e + lo > 0 {
                return;
            }
        }
        match self.terms.entry(Mono(exps)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Expands the product and extracts the coefficient of `z^0`.
///
/// Errors if a geometric factor is not positively ordered: its first
/// nonzero exponent in the declared variable order must be positive, so the
/// untruncated series is a well-defined formal power series.
pub fn constant_term(spec: &ExpansionSpec) -> Result<MultiLaurent> {
    // Validate geometric ordering.
    for f in &spec.factors {
        if let Factor::Geometric { pows, .. } = f {
            let lead = spec
                .z_vars
                .iter()
                .filter_map(|&v| {
                    pows.iter()
                        .find(|(s, e)| *s == v && *e != 0)
                        .map(|&(_, e)| e)
                })
                .next();
            match lead {
                Some(e) if e > 0 => {}
                _ => {
                    return Err(Error::IllOrderedGeometric(format!("{pows:?}")));
                }
            }
        }
    }

    // Collect the full variable set.
    let mut vars: Vec<Sym> = spec.z_vars.clone();
    for f in &spec.factors {
        match f {
            Factor::Polynomial(p) => vars.extend(p.vars().iter().copied()),
            Factor::Geometric { pows, .. } => vars.extend(pows.iter().map(|&(s, _)| s)),
        }
    }
    vars.sort();
    vars.dedup();
    let z_idx: Vec<usize> = spec
        .z_vars
        .iter()
        .map(|v| vars.iter().position(|w| w == v).unwrap())
        .collect();

    // Order factors so variables close out early: ascending min z index.
    let mut order: Vec<usize> = (0..spec.factors.len()).collect();
    order.sort_by_key(|&i| min_z_index(&spec.factors[i], &spec.z_vars));

    // Remaining contribution ranges over unprocessed factors.
    let ranges: Vec<Vec<(i64, i64)>> = spec
        .factors
        .iter()
        .map(|f| factor_range(f, &spec.z_vars))
        .collect();
    let mut remaining: Vec<(i64, i64)> = vec![(0, 0); spec.z_vars.len()];
    for r in &ranges {
        for (k, &(lo, hi)) in r.iter().enumerate() {
            remaining[k].0 += lo;
            remaining[k].1 += hi;
        }
    }

    let mut acc = Accumulator { z_idx, terms: BTreeMap::new() };
    acc.terms.insert(
        Mono(SmallVec::from_elem(0, vars.len())),
        BigRational::one(),
    );

    for &fi in &order {
        let f = &spec.factors[fi];
        for (k, &(lo, hi)) in ranges[fi].iter().enumerate() {
            remaining[k].0 -= lo;
            remaining[k].1 -= hi;
        }
        let old = std::mem::take(&mut acc.terms);
        match f {
            Factor::Polynomial(p) => {
                let p = p.with_vars(&vars);
                let pterms: Vec<(SmallVec<[i32; 8]>, BigRational)> =
                    p.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect();
                for (m, c) in &old {
                    for (pm, pc) in &pterms {
                        let exps: SmallVec<[i32; 8]> =
                            m.0.iter().zip(pm.iter()).map(|(a, b)| a + b).collect();
                        acc.insert(exps, c * pc, &remaining);
                    }
                }
            }
            Factor::Geometric { coeff, pows, bound } => {
                let step: Vec<(usize, i32)> = pows
                    .iter()
                    .filter(|&&(_, e)| e != 0)
                    .map(|&(s, e)| (vars.iter().position(|w| *w == s).unwrap(), e))
                    .collect();
                for (m, c) in &old {
                    let mut exps = m.0.clone();
                    let mut cc = c.clone();
                    acc.insert(exps.clone(), cc.clone(), &remaining);
                    for _ in 1..=*bound {
                        for &(i, e) in &step {
                            exps[i] += e;
                        }
                        cc *= coeff;
                        acc.insert(exps.clone(), cc.clone(), &remaining);
                    }
                }
            }
        }
    }

    // Keep only exponent zero in all expansion variables and trim them.
    let mut out = MultiLaurent::zero();
    for (m, c) in &acc.terms {
        if acc.z_idx.iter().all(|&i| m.0[i] == 0) {
            let pows: Vec<(Sym, i32)> = vars
                .iter()
                .zip(m.0.iter())
                .filter(|&(v, _)| !spec.z_vars.contains(v))
                .map(|(&v, &e)| (v, e))
                .collect();
            out = out.add(&MultiLaurent::monomial(c.clone(), &pows));
        }
    }
    Ok(out)
}

/// Constant term with a bound-independence check: recomputes with every
/// geometric bound raised by `delta` and errors if the result changes.
pub fn constant_term_checked(spec: &ExpansionSpec, delta: u32) -> Result<MultiLaurent> {
    let base = constant_term(spec)?;
    let raised = constant_term(&spec.with_raised_bounds(delta))?;
    if base != raised {
        return Err(Error::InsufficientBound(format!(
            "result changed when raising bounds by {delta}"
        )));
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::laurent::rat;

    /// Independent oracle: expand (1 - c/z) * sum_{n=0..N} z^n by hand and
    /// read off the z^0 coefficient.
    fn one_var_oracle(n: u32) -> MultiLaurent {
        // (1 - c/z) * z^k contributes z^k and -c z^{k-1}; z^0 arises from
        // k = 0 (coefficient 1) and k = 1 (coefficient -c).
        let mut out = MultiLaurent::zero();
        for k in 0..=n {
            if k == 0 {
                out = out.add(&MultiLaurent::one());
            }
            if k == 1 {
                out = out.add(&MultiLaurent::var(Sym::C).neg());
            }
        }
        out
    }

    #[test]
    fn single_variable_example() {
        let z = Sym::z(1);
        let mut spec = ExpansionSpec::new(vec![z]);
        spec.polynomial(
            MultiLaurent::one()
                .sub(&MultiLaurent::monomial(rat(1, 1), &[(Sym::C, 2), (z, -2)])),
        );
        spec.geometric(BigRational::one(), &[(z, 2)], 1);
        let ct = constant_term(&spec).unwrap();
        assert_eq!(ct, one_var_oracle(1));
        assert_eq!(ct, MultiLaurent::one().sub(&MultiLaurent::var(Sym::C)));
        // Raising the bound does not change the answer.
        let ct2 = constant_term_checked(&spec, 3).unwrap();
        assert_eq!(ct2, ct);
    }

    #[test]
    fn ill_ordered_geometric_rejected() {
        let z = Sym::z(1);
        let mut spec = ExpansionSpec::new(vec![z]);
        spec.geometric(BigRational::one(), &[(z, -2)], 3);
        assert!(matches!(
            constant_term(&spec),
            Err(Error::IllOrderedGeometric(_))
        ));
    }

    #[test]
    fn two_variable_ratio() {
        // Only the n = 0 term of sum_n (z1/(t z2))^n has z-exponent zero, and
        // the binomial can never cancel the ratio back to zero, so CT = 1.
        let z1 = Sym::z(1);
        let z2 = Sym::z(2);
        let mut spec = ExpansionSpec::new(vec![z1, z2]);
        spec.polynomial(
            MultiLaurent::one()
                .sub(&MultiLaurent::monomial(rat(1, 1), &[(z1, 2), (z2, -2)])),
        );
        spec.geometric(BigRational::one(), &[(Sym::T, -2), (z1, 2), (z2, -2)], 4);
        let ct = constant_term(&spec).unwrap();
        assert_eq!(ct, MultiLaurent::one());
    }
}

//! Symmetric functions: monomial, power-sum, elementary, Schur and
//! Macdonald/Hall-Littlewood bases, conversions between them, both scalar
//! products and the principal specializations.

pub mod macdonald;
pub mod qnum;
pub mod special;
pub mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num::rational::BigRational;
use num::{One, Zero};

use crate::exactalg::{RatFun, Sym};
use crate::partitions::Partition;

pub use macdonald::{
    macdonald_block, macdonald_norm, macdonald_p, params_hl, params_qt, params_schur,
    params_tilde, second_scalar, transition_u_matrix, transition_v_matrix, transition_u_entry,
    transition_v_entry, MacParams,
};
pub use qnum::{qbinom, qfactorial, qint, qnumbers};
pub use special::{
    eval_at_spec, gamma_qt, gamma_schur, hook_pair_product, principal_product, spec_powersum,
    Specialization,
};

/// Basis tag of a [`SymFun`]. Hall-Littlewood is `Macdonald(0, t)` and the
/// Schur basis has a tag of its own (it equals `Macdonald(q, q)`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    Monomial,
    PowerSum,
    Elementary,
    Schur,
    Macdonald(RatFun, RatFun),
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Monomial => write!(f, "m"),
            Basis::PowerSum => write!(f, "p"),
            Basis::Elementary => write!(f, "e"),
            Basis::Schur => write!(f, "s"),
            Basis::Macdonald(q, t) => write!(f, "P({q},{t})"),
        }
    }
}

/// A symmetric function presented in a tagged basis: a finite linear
/// combination of basis elements indexed by partitions, with
/// rational-function coefficients. Graded components may be mixed.
#[derive(Clone, PartialEq, Debug)]
pub struct SymFun {
    basis: Basis,
    coeffs: BTreeMap<Partition, RatFun>,
}

impl SymFun {
    pub fn zero(basis: Basis) -> Self {
        SymFun { basis, coeffs: BTreeMap::new() }
    }

    /// A single basis element.
    pub fn unit(basis: Basis, lam: Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lam, RatFun::one());
        SymFun { basis, coeffs }
    }

    pub fn from_coeffs(basis: Basis, coeffs: BTreeMap<Partition, RatFun>) -> Self {
        let mut f = SymFun { basis, coeffs };
        f.coeffs.retain(|_, c| !c.is_zero());
        f
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, RatFun> {
        &self.coeffs
    }

    pub fn coeff(&self, lam: &Partition) -> RatFun {
        self.coeffs.get(lam).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree when homogeneous, `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.coeffs.keys().map(|p| p.size());
        let d = it.next()?;
        if it.all(|x| x == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "basis mismatch in add");
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            let entry = coeffs.entry(k.clone()).or_insert_with(RatFun::zero);
            *entry = entry.add(v);
        }
        coeffs.retain(|_, c| !c.is_zero());
        SymFun { basis: self.basis.clone(), coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RatFun::int(-1)))
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis.clone());
        }
        SymFun {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect(),
        }
    }

    /// Conversion to the power-sum basis.
    pub fn to_p(&self) -> SymFun {
        match &self.basis {
            Basis::PowerSum => self.clone(),
            Basis::Monomial => self.rows_to_p(|t, i| t.m_in_p[i].clone()),
            Basis::Schur => self.rows_to_p(|t, i| t.s_in_p[i].clone()),
            Basis::Elementary => {
                // Products of single-column e_r expansions; partitions of
                // mixed sizes are fine here.
                let mut out = SymFun::zero(Basis::PowerSum);
                for (lam, c) in &self.coeffs {
                    let table = tables::elementary_in_p(lam.first_part());
                    let mut term: tables::PMap = BTreeMap::new();
                    term.insert(Partition::empty(), BigRational::one());
                    let mut acc: tables::PMap = term;
                    for &part in lam.parts() {
                        let mut next: tables::PMap = BTreeMap::new();
                        for (nu, cv) in &acc {
                            for (kappa, cw) in &table[part as usize] {
                                *next
                                    .entry(nu.merge(kappa))
                                    .or_insert_with(BigRational::zero) += cv * cw;
                            }
                        }
                        next.retain(|_, x| !x.is_zero());
                        acc = next;
                    }
                    for (nu, cv) in acc {
                        let add = c.scale(&cv);
                        let entry = out.coeffs.entry(nu).or_insert_with(RatFun::zero);
                        *entry = entry.add(&add);
                    }
                }
                out.coeffs.retain(|_, c| !c.is_zero());
                out
            }
            Basis::Macdonald(qp, tp) => {
                let params = (qp.clone(), tp.clone());
                let mut out = SymFun::zero(Basis::PowerSum);
                for (lam, c) in &self.coeffs {
                    let d = lam.size() as usize;
                    let block = macdonald::macdonald_block(d, &params);
                    let t = tables::degree_tables(d);
                    let i = t.index[lam];
                    for (j, u) in block.u[i].iter().enumerate() {
                        if u.is_zero() {
                            continue;
                        }
                        for (k, r) in t.m_in_p[j].iter().enumerate() {
                            if r.is_zero() {
                                continue;
                            }
                            let add = c.mul(u).scale(r);
                            let entry = out
                                .coeffs
                                .entry(t.parts[k].clone())
                                .or_insert_with(RatFun::zero);
                            *entry = entry.add(&add);
                        }
                    }
                }
                out.coeffs.retain(|_, c| !c.is_zero());
                out
            }
        }
    }

    fn rows_to_p(
        &self,
        row: impl Fn(&tables::DegreeTables, usize) -> Vec<BigRational>,
    ) -> SymFun {
        let mut out = SymFun::zero(Basis::PowerSum);
        for (lam, c) in &self.coeffs {
            let t = tables::degree_tables(lam.size() as usize);
            let i = t.index[lam];
            for (j, r) in row(&t, i).iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                let add = c.scale(r);
                let entry = out
                    .coeffs
                    .entry(t.parts[j].clone())
                    .or_insert_with(RatFun::zero);
                *entry = entry.add(&add);
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    /// Conversion from the power-sum basis into `target`.
    fn from_p(&self, target: &Basis) -> SymFun {
        assert_eq!(self.basis, Basis::PowerSum);
        match target {
            Basis::PowerSum => self.clone(),
            Basis::Monomial | Basis::Elementary => self.p_rows_to(target.clone()),
            Basis::Schur => {
                // Coefficients from the Hall pairing against orthonormal s.
                let mut out = SymFun::zero(Basis::Schur);
                for d in self.degrees() {
                    let t = tables::degree_tables(d as usize);
                    for (i, lam) in t.parts.iter().enumerate() {
                        let mut acc = RatFun::zero();
                        for (j, nu) in t.parts.iter().enumerate() {
                            let v = self.coeff(nu);
                            if v.is_zero() || t.s_in_p[i][j].is_zero() {
                                continue;
                            }
                            acc = acc.add(&v.scale(&(&t.s_in_p[i][j] * nu.z_factor())));
                        }
                        if !acc.is_zero() {
                            out.coeffs.insert(lam.clone(), acc);
                        }
                    }
                }
                out
            }
            Basis::Macdonald(qp, tp) => {
                let params = (qp.clone(), tp.clone());
                let mut out = SymFun::zero(target.clone());
                for d in self.degrees() {
                    let block = macdonald::macdonald_block(d as usize, &params);
                    let t = tables::degree_tables(d as usize);
                    for (i, lam) in t.parts.iter().enumerate() {
                        // <f, P_lam> / <P_lam, P_lam>
                        let mut acc = RatFun::zero();
                        for (j, nu) in t.parts.iter().enumerate() {
                            let v = self.coeff(nu);
                            if v.is_zero() || block.p_rows[i][j].is_zero() {
                                continue;
                            }
                            let d_nu = special::powersum_norm(nu, qp, tp);
                            acc = acc.add(&v.mul(&block.p_rows[i][j]).mul(&d_nu));
                        }
                        if !acc.is_zero() {
                            let c = acc.div(&block.norms[i]).expect("nonzero norm");
                            out.coeffs.insert(lam.clone(), c);
                        }
                    }
                }
                out
            }
        }
    }

    fn p_rows_to(&self, target: Basis) -> SymFun {
        // Shared implementation for the rational transition tables.
        let mut out = SymFun::zero(target.clone());
        for d in self.degrees() {
            let t = tables::degree_tables(d as usize);
            let mat = match target {
                Basis::Monomial => &t.p_in_m,
                Basis::Elementary => &t.e_in_p_inv,
                _ => unreachable!(),
            };
            match target {
                Basis::Monomial => {
                    // f = sum_nu v_nu p_nu, p_nu = sum_j mat[nu][j] m_j
                    for (i, nu) in t.parts.iter().enumerate() {
                        let v = self.coeff(nu);
                        if v.is_zero() {
                            continue;
                        }
                        for (j, r) in mat[i].iter().enumerate() {
                            if r.is_zero() {
                                continue;
                            }
                            let add = v.scale(r);
                            let entry = out
                                .coeffs
                                .entry(t.parts[j].clone())
                                .or_insert_with(RatFun::zero);
                            *entry = entry.add(&add);
                        }
                    }
                }
                Basis::Elementary => {
                    // w = v * E^{-1}: w_i = sum_nu v_nu (E^{-1})[nu][i]
                    for (i, lam) in t.parts.iter().enumerate() {
                        let mut acc = RatFun::zero();
                        for (j, nu) in t.parts.iter().enumerate() {
                            let v = self.coeff(nu);
                            if v.is_zero() || mat[j][i].is_zero() {
                                continue;
                            }
                            acc = acc.add(&v.scale(&mat[j][i]));
                        }
                        if !acc.is_zero() {
                            out.coeffs.insert(lam.clone(), acc);
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.coeffs.keys().map(|p| p.size()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Re-expands in `target`; round-trips are exact.
    pub fn convert(&self, target: &Basis) -> SymFun {
        if &self.basis == target {
            return self.clone();
        }
        self.to_p().from_p(target)
    }

    /// Product, computed in the power-sum basis and returned there.
    pub fn mul_p(&self, other: &Self) -> SymFun {
        let a = self.to_p();
        let b = other.to_p();
        let mut out = SymFun::zero(Basis::PowerSum);
        for (na, ca) in &a.coeffs {
            for (nb, cb) in &b.coeffs {
                let key = na.merge(nb);
                let add = ca.mul(cb);
                let entry = out.coeffs.entry(key).or_insert_with(RatFun::zero);
                *entry = entry.add(&add);
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: serde_json::Map<String, serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_json()))
            .collect();
        serde_json::json!({
            "basis": self.basis.to_string(),
            "degree": self.degree(),
            "coeffs": coeffs,
        })
    }
}

/// The deformed scalar product: `<p_lam, p_mu> = delta z_lam prod_i
/// (1-q^{lam_i})/(1-t^{lam_i})` extended bilinearly. Inputs of mixed degree
/// pair off degree by degree.
pub fn scalar_qt(f: &SymFun, g: &SymFun, qp: &RatFun, tp: &RatFun) -> RatFun {
    let a = f.to_p();
    let b = g.to_p();
    let mut acc = RatFun::zero();
    for (nu, ca) in &a.coeffs {
        let cb = b.coeff(nu);
        if cb.is_zero() {
            continue;
        }
        acc = acc.add(&ca.mul(&cb).mul(&special::powersum_norm(nu, qp, tp)));
    }
    acc
}

/// Hall pairing (`q = t` slice): `<p_lam, p_mu> = delta z_lam`.
pub fn scalar_hall(f: &SymFun, g: &SymFun) -> RatFun {
    let a = f.to_p();
    let b = g.to_p();
    let mut acc = RatFun::zero();
    for (nu, ca) in &a.coeffs {
        let cb = b.coeff(nu);
        if cb.is_zero() {
            continue;
        }
        acc = acc.add(&ca.mul(&cb).scale(&nu.z_factor()));
    }
    acc
}

/// Skew Schur function `s_{lam/nu}` in the Schur basis, via the Hall
/// pairing `<s_lam, s_nu s_mu>`. Returns zero when `nu` is not contained
/// in `lam`.
pub fn skew_schur(lam: &Partition, nu: &Partition) -> SymFun {
    if !nu.contained_in(lam) {
        return SymFun::zero(Basis::Schur);
    }
    let s_lam = SymFun::unit(Basis::Schur, lam.clone());
    let s_nu = SymFun::unit(Basis::Schur, nu.clone());
    let d = lam.size() - nu.size();
    let mut out = SymFun::zero(Basis::Schur);
    for mu in Partition::enumerate(d, None) {
        let s_mu = SymFun::unit(Basis::Schur, mu.clone());
        let c = scalar_hall(&s_lam, &s_nu.mul_p(&s_mu));
        if !c.is_zero() {
            out.coeffs.insert(mu, c);
        }
    }
    out
}

/// Shorthands used throughout the higher modules.
pub fn rf_q() -> RatFun {
    RatFun::var(Sym::Q)
}

pub fn rf_t() -> RatFun {
    RatFun::var(Sym::T)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn e2_is_m11() {
        let e2 = SymFun::unit(Basis::Elementary, pt(&[2]));
        let m = e2.convert(&Basis::Monomial);
        assert_eq!(m.coeff(&pt(&[1, 1])), RatFun::one());
        assert!(m.coeff(&pt(&[2])).is_zero());
    }

    #[test]
    fn s2_in_monomials() {
        let s2 = SymFun::unit(Basis::Schur, pt(&[2]));
        let m = s2.convert(&Basis::Monomial);
        assert_eq!(m.coeff(&pt(&[2])), RatFun::one());
        assert_eq!(m.coeff(&pt(&[1, 1])), RatFun::one());
    }

    #[test]
    fn basis_roundtrips() {
        for basis in [Basis::Monomial, Basis::Elementary, Basis::Schur] {
            for lam in Partition::enumerate(4, None) {
                let f = SymFun::unit(basis.clone(), lam.clone());
                let back = f.to_p().from_p(&basis);
                assert_eq!(back, f, "roundtrip {basis} at {lam}");
            }
        }
    }

    #[test]
    fn skew_schur_examples() {
        // s_{lam/empty} = s_lam
        let s = skew_schur(&pt(&[2, 1]), &Partition::empty());
        assert_eq!(s, SymFun::unit(Basis::Schur, pt(&[2, 1])));
        // s_{(2)/(1)} = s_(1)
        let s = skew_schur(&pt(&[2]), &pt(&[1]));
        assert_eq!(s, SymFun::unit(Basis::Schur, pt(&[1])));
        // s_{(2,1)/(1)} = s_(2) + s_(1,1)
        let s = skew_schur(&pt(&[2, 1]), &pt(&[1]));
        assert_eq!(s.coeff(&pt(&[2])), RatFun::one());
        assert_eq!(s.coeff(&pt(&[1, 1])), RatFun::one());
        // nu not contained in lam gives zero
        assert!(skew_schur(&pt(&[2]), &pt(&[1, 1])).is_zero());
    }

    #[test]
    fn hall_orthonormality_of_schur() {
        for lam in Partition::enumerate(3, None) {
            for mu in Partition::enumerate(3, None) {
                let v = scalar_hall(
                    &SymFun::unit(Basis::Schur, lam.clone()),
                    &SymFun::unit(Basis::Schur, mu.clone()),
                );
                assert_eq!(v, if lam == mu { RatFun::one() } else { RatFun::zero() });
            }
        }
    }
}

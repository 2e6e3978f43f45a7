//! Per-degree rational transition tables between the classical bases.
//!
//! All matrices are indexed by the canonical partition list of the degree
//! (reverse-lexicographic, so the row partition decreases down the list and
//! dominance-triangular matrices are triangular in the list order).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num::rational::BigRational;
use num::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::partitions::Partition;

/// Sparse power-sum expansion with rational coefficients.
pub type PMap = BTreeMap<Partition, BigRational>;

#[derive(Debug)]
pub struct DegreeTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_{parts[i]} = sum_j p_in_m[i][j] m_{parts[j]}`
    pub p_in_m: Vec<Vec<BigRational>>,
    /// `m_{parts[i]} = sum_j m_in_p[i][j] p_{parts[j]}`
    pub m_in_p: Vec<Vec<BigRational>>,
    /// `e_{parts[i]} = sum_j e_in_p[i][j] p_{parts[j]}`
    pub e_in_p: Vec<Vec<BigRational>>,
    pub e_in_p_inv: Vec<Vec<BigRational>>,
    /// `s_{parts[i]} = sum_j s_in_p[i][j] p_{parts[j]}`
    pub s_in_p: Vec<Vec<BigRational>>,
    /// `e_{parts[i]^vee} = sum_j a_mat[i][j] m_{parts[j]}`
    pub a_mat: Vec<Vec<BigRational>>,
    pub a_inv: Vec<Vec<BigRational>>,
}

static TABLES: Lazy<Mutex<HashMap<usize, Arc<DegreeTables>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub fn degree_tables(d: usize) -> Arc<DegreeTables> {
    if let Some(t) = TABLES.lock().unwrap().get(&d) {
        return t.clone();
    }
    let t = Arc::new(build_tables(d));
    TABLES.lock().unwrap().entry(d).or_insert(t).clone()
}

/// Multiplies an m-basis expansion by the power sum `p_n`.
/// `m_mu * p_n = sum_u mult_{u+n}(nu_u) m_{nu_u}` where `nu_u` replaces one
/// part `u` of `mu` (including `u = 0`) by `u + n`.
fn m_times_pn(expansion: &BTreeMap<Partition, BigRational>, n: u32) -> BTreeMap<Partition, BigRational> {
    let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for (mu, c) in expansion {
        let mut values: Vec<u32> = mu.parts().to_vec();
        values.dedup();
        values.push(0);
        for &u in &values {
            let mut parts: Vec<u32> = mu.parts().to_vec();
            if u == 0 {
                parts.push(n);
            } else {
                let pos = parts.iter().position(|&p| p == u).unwrap();
                parts[pos] = u + n;
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let nu = Partition::new(parts).expect("valid partition");
            let mult = nu.multiplicity(u + n) as i64;
            let add = c * BigRational::from(num::BigInt::from(mult));
            *out.entry(nu).or_insert_with(BigRational::zero) += add;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Power-sum expansions of the elementary functions `e_0..=e_max` via the
/// Newton recurrence `r e_r = sum_{i=1..r} (-1)^{i-1} p_i e_{r-i}`.
pub fn elementary_in_p(max: u32) -> Vec<PMap> {
    let mut out: Vec<PMap> = Vec::with_capacity(max as usize + 1);
    let mut e0 = PMap::new();
    e0.insert(Partition::empty(), BigRational::one());
    out.push(e0);
    for r in 1..=max {
        let mut acc = PMap::new();
        for i in 1..=r {
            let sign = if i % 2 == 1 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            for (nu, c) in &out[(r - i) as usize] {
                let key = nu.merge(&Partition::row(i));
                *acc.entry(key).or_insert_with(BigRational::zero) += c * &sign;
            }
        }
        let rinv = BigRational::from(num::BigInt::from(r as i64)).recip();
        for c in acc.values_mut() {
            *c *= &rinv;
        }
        acc.retain(|_, c| !c.is_zero());
        out.push(acc);
    }
    out
}

fn pmap_mul(a: &PMap, b: &PMap) -> PMap {
    let mut out = PMap::new();
    for (na, ca) in a {
        for (nb, cb) in b {
            *out.entry(na.merge(nb)).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Power-sum expansion of a Schur function via the Jacobi-Trudi determinant
/// `s_lambda = det(e_{lambda^vee_i - i + j})`.
pub fn schur_in_p(lam: &Partition, e_table: &[PMap]) -> PMap {
    if lam.is_empty() {
        let mut m = PMap::new();
        m.insert(Partition::empty(), BigRational::one());
        return m;
    }
    let conj = lam.conjugate();
    let k = conj.len();
    let mut acc = PMap::new();
    for (perm, inv) in crate::partitions::permutations_with_inversions(k) {
        let mut term = PMap::new();
        term.insert(Partition::empty(), BigRational::one());
        let mut dead = false;
        for (i, &sigma_i) in perm.iter().enumerate() {
            let idx = conj.part(i + 1) as i64 - (i as i64 + 1) + (sigma_i as i64 + 1);
            if idx < 0 {
                dead = true;
                break;
            }
            if idx == 0 {
                continue;
            }
            term = pmap_mul(&term, &e_table[idx as usize]);
        }
        if dead {
            continue;
        }
        let sign = if inv % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        for (nu, c) in term {
            *acc.entry(nu).or_insert_with(BigRational::zero) += c * &sign;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

fn build_tables(d: usize) -> DegreeTables {
    let parts = Partition::enumerate(d as u32, None);
    let n = parts.len();
    let index: HashMap<Partition, usize> =
        parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    // p_lambda in the m basis.
    let mut p_in_m = vec![vec![BigRational::zero(); n]; n];
    for (i, lam) in parts.iter().enumerate() {
        let mut exp: BTreeMap<Partition, BigRational> = BTreeMap::new();
        exp.insert(Partition::empty(), BigRational::one());
        for &part in lam.parts() {
            exp = m_times_pn(&exp, part);
        }
        for (mu, c) in exp {
            p_in_m[i][index[&mu]] = c;
        }
    }
    let m_in_p = invert_rational(&p_in_m);

    let e_table = elementary_in_p(d as u32);
    let mut e_in_p = vec![vec![BigRational::zero(); n]; n];
    for (i, lam) in parts.iter().enumerate() {
        let mut term = PMap::new();
        term.insert(Partition::empty(), BigRational::one());
        for &part in lam.parts() {
            term = pmap_mul(&term, &e_table[part as usize]);
        }
        for (nu, c) in term {
            e_in_p[i][index[&nu]] = c;
        }
    }
    let e_in_p_inv = invert_rational(&e_in_p);

    let mut s_in_p = vec![vec![BigRational::zero(); n]; n];
    for (i, lam) in parts.iter().enumerate() {
        for (nu, c) in schur_in_p(lam, &e_table) {
            s_in_p[i][index[&nu]] = c;
        }
    }

    // e_{lambda^vee} in the m basis: (e_in_p row of lambda^vee) * p_in_m.
    let mut a_mat = vec![vec![BigRational::zero(); n]; n];
    for (i, lam) in parts.iter().enumerate() {
        let conj = lam.conjugate();
        let row = &e_in_p[index[&conj]];
        for (k, coeff) in row.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (j, pm) in p_in_m[k].iter().enumerate() {
                if !pm.is_zero() {
                    a_mat[i][j] += coeff * pm;
                }
            }
        }
    }
    let a_inv = invert_rational(&a_mat);

    DegreeTables { parts, index, p_in_m, m_in_p, e_in_p, e_in_p_inv, s_in_p, a_mat, a_inv }
}

/// Dense Gaussian inverse over the rationals.
pub fn invert_rational(m: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv = vec![vec![BigRational::zero(); n]; n];
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular transition matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for x in inv[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for k in 0..n {
                let t = &a[col][k] * &f;
                a[r][k] -= t;
                let t = &inv[col][k] * &f;
                inv[r][k] -= t;
            }
        }
    }
    inv
}

/// Sign helper used by positivity checks.
pub fn is_nonneg(c: &BigRational) -> bool {
    !c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn p2_in_m_and_back() {
        let t = degree_tables(2);
        // p_2 = m_2, p_{11} = m_2 + 2 m_{11}
        let i_p2 = t.index[&p(&[2])];
        let i_p11 = t.index[&p(&[1, 1])];
        assert_eq!(t.p_in_m[i_p2][i_p2], BigRational::one());
        assert!(t.p_in_m[i_p2][i_p11].is_zero());
        assert_eq!(t.p_in_m[i_p11][i_p2], BigRational::one());
        assert_eq!(
            t.p_in_m[i_p11][i_p11],
            BigRational::from(num::BigInt::from(2))
        );
        // Inverse really inverts.
        for i in 0..t.parts.len() {
            for j in 0..t.parts.len() {
                let mut acc = BigRational::zero();
                for k in 0..t.parts.len() {
                    acc += &t.p_in_m[i][k] * &t.m_in_p[k][j];
                }
                let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                assert_eq!(acc, expect);
            }
        }
    }

    #[test]
    fn schur_degree_two() {
        // s_2 = (p_2 + p_1^2)/2, s_11 = (p_1^2 - p_2)/2
        let t = degree_tables(2);
        let half = BigRational::new(num::BigInt::from(1), num::BigInt::from(2));
        let i_s2 = t.index[&p(&[2])];
        let i_2 = t.index[&p(&[2])];
        let i_11 = t.index[&p(&[1, 1])];
        assert_eq!(t.s_in_p[i_s2][i_2], half);
        assert_eq!(t.s_in_p[i_s2][i_11], half);
        let i_s11 = t.index[&p(&[1, 1])];
        assert_eq!(t.s_in_p[i_s11][i_2], -half.clone());
        assert_eq!(t.s_in_p[i_s11][i_11], half);
    }

    #[test]
    fn elementary_unitriangular_over_monomials() {
        // e_{lambda^vee} = m_lambda + (dominance-lower terms)
        for d in 1..=5usize {
            let t = degree_tables(d);
            for (i, lam) in t.parts.iter().enumerate() {
                assert_eq!(t.a_mat[i][i], BigRational::one(), "diag at {lam}");
                for (j, mu) in t.parts.iter().enumerate() {
                    if !t.a_mat[i][j].is_zero() {
                        assert!(
                            crate::partitions::dominance_leq(mu, lam),
                            "support of e_(lam^vee) outside dominance ideal: {lam} vs {mu}"
                        );
                        assert!(t.a_mat[i][j].is_integer());
                        assert!(is_nonneg(&t.a_mat[i][j]));
                    }
                }
            }
        }
    }
}

//! Macdonald symmetric functions by Gram-Schmidt orthogonalization over the
//! deformed power-sum scalar product, transition matrices to the Schur and
//! elementary bases, and the finite-N constant-term scalar product under
//! which the Hall-Littlewood functions are orthogonal.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num::rational::BigRational;
use num::{One, Zero};
use once_cell::sync::Lazy;

use super::special::powersum_norm;
use super::tables::degree_tables;
use super::{Basis, SymFun};
use crate::exactalg::{constant_term, ExpansionSpec, MultiLaurent, RatFun, Sym};
use crate::error::Result;
use crate::partitions::{distinct_permutations, Partition};

/// Macdonald parameter pair `(q, t)` as rational functions.
pub type MacParams = (RatFun, RatFun);

pub fn params_qt() -> MacParams {
    (RatFun::var(Sym::Q), RatFun::var(Sym::T))
}

/// `P(q, q)` is the Schur basis.
pub fn params_schur() -> MacParams {
    (RatFun::var(Sym::Q), RatFun::var(Sym::Q))
}

/// `P(0, t)` is the Hall-Littlewood basis.
pub fn params_hl() -> MacParams {
    (RatFun::zero(), RatFun::var(Sym::T))
}

/// `P(qtilde, 0)`, the deformed coloring basis.
pub fn params_tilde() -> MacParams {
    (RatFun::var(Sym::QTilde), RatFun::zero())
}

/// One degree block of the Macdonald basis: unitriangular expansion over
/// monomials in the canonical partition order, its inverse, the norms, and
/// the power-sum coordinates.
#[derive(Debug)]
pub struct MacdonaldBlock {
    pub parts: Vec<Partition>,
    /// `P_{parts[i]} = sum_j u[i][j] m_{parts[j]}`, upper unitriangular.
    pub u: Vec<Vec<RatFun>>,
    /// Inverse transition: `m_{parts[i]} = sum_j u_inv[i][j] P_{parts[j]}`.
    pub u_inv: Vec<Vec<RatFun>>,
    /// `<P_i, P_i>` under the deformed scalar product.
    pub norms: Vec<RatFun>,
    /// `P_{parts[i]} = sum_j p_rows[i][j] p_{parts[j]}`.
    pub p_rows: Vec<Vec<RatFun>>,
}

type BlockKey = (usize, RatFun, RatFun);

static BLOCKS: Lazy<Mutex<HashMap<BlockKey, Arc<MacdonaldBlock>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub fn macdonald_block(d: usize, params: &MacParams) -> Arc<MacdonaldBlock> {
    let key = (d, params.0.clone(), params.1.clone());
    if let Some(b) = BLOCKS.lock().unwrap().get(&key) {
        return b.clone();
    }
    let b = Arc::new(build_block(d, params));
    BLOCKS.lock().unwrap().entry(key).or_insert(b).clone()
}

fn build_block(d: usize, params: &MacParams) -> MacdonaldBlock {
    let t = degree_tables(d);
    let n = t.parts.len();
    let (qp, tp) = params;

    // Gram matrix of the monomial basis under the deformed product.
    let weights: Vec<RatFun> = t.parts.iter().map(|nu| powersum_norm(nu, qp, tp)).collect();
    let mut gram = vec![vec![RatFun::zero(); n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut acc = RatFun::zero();
            for k in 0..n {
                if t.m_in_p[i][k].is_zero() || t.m_in_p[j][k].is_zero() {
                    continue;
                }
                let c = &t.m_in_p[i][k] * &t.m_in_p[j][k];
                acc = acc.add(&weights[k].scale(&c));
            }
            gram[i][j] = acc.clone();
            gram[j][i] = acc;
        }
    }

    // Gram-Schmidt from the bottom of the dominance-compatible order, so
    // each P is m plus strictly lower terms.
    let mut u = vec![vec![RatFun::zero(); n]; n];
    let mut norms = vec![RatFun::zero(); n];
    for i in (0..n).rev() {
        let mut v = vec![RatFun::zero(); n];
        v[i] = RatFun::one();
        for j in (i + 1)..n {
            // coefficient <m_i, P_j> / <P_j, P_j>
            let mut num = RatFun::zero();
            for (k, ujk) in u[j].iter().enumerate() {
                if ujk.is_zero() || gram[i][k].is_zero() {
                    continue;
                }
                num = num.add(&gram[i][k].mul(ujk));
            }
            if num.is_zero() {
                continue;
            }
            let c = num.div(&norms[j]).expect("nonzero Macdonald norm");
            for (k, ujk) in u[j].iter().enumerate() {
                if ujk.is_zero() {
                    continue;
                }
                v[k] = v[k].sub(&c.mul(ujk));
            }
        }
        // <v, v> = <m_i, v> because the projections are orthogonal to v.
        let mut norm = RatFun::zero();
        for (k, vk) in v.iter().enumerate() {
            if vk.is_zero() || gram[i][k].is_zero() {
                continue;
            }
            norm = norm.add(&gram[i][k].mul(vk));
        }
        norms[i] = norm;
        u[i] = v;
    }

    // Invert the unitriangular system by back-substitution.
    let mut u_inv = vec![vec![RatFun::zero(); n]; n];
    for i in (0..n).rev() {
        u_inv[i][i] = RatFun::one();
        for j in (i + 1)..n {
            // m_i = P_i - sum_{k>i} u[i][k] m_k
            let mut acc = RatFun::zero();
            for k in (i + 1)..=j {
                if u[i][k].is_zero() || u_inv[k][j].is_zero() {
                    continue;
                }
                acc = acc.sub(&u[i][k].mul(&u_inv[k][j]));
            }
            u_inv[i][j] = acc;
        }
    }

    // Power-sum coordinates of each P.
    let mut p_rows = vec![vec![RatFun::zero(); n]; n];
    for i in 0..n {
        for (k, uik) in u[i].iter().enumerate() {
            if uik.is_zero() {
                continue;
            }
            for (j, r) in t.m_in_p[k].iter().enumerate() {
                if r.is_zero() {
                    continue;
                }
                p_rows[i][j] = p_rows[i][j].add(&uik.scale(r));
            }
        }
    }

    MacdonaldBlock { parts: t.parts.clone(), u, u_inv, norms, p_rows }
}

/// The Macdonald function `P_lambda` in the monomial basis.
pub fn macdonald_p(lam: &Partition, params: &MacParams) -> SymFun {
    let d = lam.size() as usize;
    let block = macdonald_block(d, params);
    let t = degree_tables(d);
    let i = t.index[lam];
    let coeffs = block.u[i]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (t.parts[j].clone(), c.clone()))
        .collect();
    SymFun::from_coeffs(Basis::Monomial, coeffs)
}

/// Norm `<P_lambda, P_lambda>` by the arm/leg product formula.
pub fn macdonald_norm(lam: &Partition, qp: &RatFun, tp: &RatFun) -> RatFun {
    let mut acc = RatFun::one();
    for (i, j) in lam.cells() {
        let (arm, leg, _, _) = lam.cell_stats(i, j).unwrap();
        let num = RatFun::one().sub(&qp.pow(arm as i32 + 1).unwrap().mul(&tp.pow(leg as i32).unwrap()));
        let den = RatFun::one().sub(&qp.pow(arm as i32).unwrap().mul(&tp.pow(leg as i32 + 1).unwrap()));
        acc = acc.mul(&num.div(&den).expect("nonzero norm factor"));
    }
    acc
}

type MatKey = (usize, RatFun, RatFun, RatFun, RatFun);
static UMATS: Lazy<Mutex<HashMap<MatKey, Arc<Vec<Vec<RatFun>>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Transition matrix `U` with `P_lambda(src) = sum_{mu <= lambda} U[lambda][mu]
/// P_mu(tgt)`, i.e. `U = u(src) u(tgt)^{-1}` per degree block.
pub fn transition_u_matrix(d: usize, src: &MacParams, tgt: &MacParams) -> Arc<Vec<Vec<RatFun>>> {
    let key = (d, src.0.clone(), src.1.clone(), tgt.0.clone(), tgt.1.clone());
    if let Some(m) = UMATS.lock().unwrap().get(&key) {
        return m.clone();
    }
    let bs = macdonald_block(d, src);
    let bt = macdonald_block(d, tgt);
    let n = bs.parts.len();
    let mut m = vec![vec![RatFun::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut acc = RatFun::zero();
            for k in i..=j {
                if bs.u[i][k].is_zero() || bt.u_inv[k][j].is_zero() {
                    continue;
                }
                acc = acc.add(&bs.u[i][k].mul(&bt.u_inv[k][j]));
            }
            m[i][j] = acc;
        }
    }
    let m = Arc::new(m);
    UMATS.lock().unwrap().entry(key).or_insert(m).clone()
}

/// Single entry `U_{lambda,mu}` of the transition matrix; `src = (q,q)`
/// expresses Schur functions over Macdonald `tgt = (q,t)`.
pub fn transition_u_entry(lam: &Partition, mu: &Partition, src: &MacParams, tgt: &MacParams) -> RatFun {
    if lam.size() != mu.size() {
        return RatFun::zero();
    }
    let d = lam.size() as usize;
    let m = transition_u_matrix(d, src, tgt);
    let t = degree_tables(d);
    m[t.index[lam]][t.index[mu]].clone()
}

/// Matrix `V` with `P_lambda(src) = sum_mu V[lambda][mu] e_{mu^vee}`.
pub fn transition_v_matrix(d: usize, src: &MacParams) -> Vec<Vec<RatFun>> {
    let bs = macdonald_block(d, src);
    let t = degree_tables(d);
    let n = bs.parts.len();
    let mut m = vec![vec![RatFun::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = RatFun::zero();
            for k in 0..n {
                if bs.u[i][k].is_zero() || t.a_inv[k][j].is_zero() {
                    continue;
                }
                acc = acc.add(&bs.u[i][k].scale(&t.a_inv[k][j]));
            }
            m[i][j] = acc;
        }
    }
    m
}

/// Entry `V_{lambda,mu}` with `s_lambda = sum_mu V_{lambda,mu} e_{mu^vee}`.
pub fn transition_v_entry(lam: &Partition, mu: &Partition) -> RatFun {
    if lam.size() != mu.size() {
        return RatFun::zero();
    }
    let d = lam.size() as usize;
    let m = transition_v_matrix(d, &params_schur());
    let t = degree_tables(d);
    m[t.index[lam]][t.index[mu]].clone()
}

/// Expands a symmetric function as a polynomial in `x_1..x_N` (setting the
/// remaining variables to zero). Returns `(numerator, denominator)` with the
/// denominator free of the `x` variables.
pub fn nvar_expansion(f: &SymFun, n: usize) -> (MultiLaurent, MultiLaurent) {
    let m = f.convert(&Basis::Monomial);
    let mut num = MultiLaurent::zero();
    let mut den = MultiLaurent::one();
    // Common denominator over all coefficients.
    for c in m.coeffs().values() {
        let g = den.gcd(c.den());
        den = den.mul(&c.den().exact_div(&g).unwrap());
    }
    for (lam, c) in m.coeffs() {
        if lam.len() > n {
            continue;
        }
        let scale = c
            .mul(&RatFun::from(den.clone()))
            .as_laurent()
            .expect("cleared denominator")
            .clone();
        let mut padded: Vec<u32> = lam.parts().to_vec();
        padded.resize(n, 0);
        let mut mono_sum = MultiLaurent::zero();
        for perm in distinct_permutations(&padded) {
            let pows: Vec<(Sym, i32)> = perm
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e != 0)
                .map(|(i, &e)| (Sym::x(i + 1), 2 * e as i32))
                .collect();
            mono_sum = mono_sum.add(&MultiLaurent::monomial(BigRational::one(), &pows));
        }
        num = num.add(&scale.mul(&mono_sum));
    }
    (num, den)
}

/// The constant-term scalar product `<f, g>''_{N;t}`: the constant term of
/// `f(xbar^{-1}) Delta(x;t) g(x)` where `Delta(x;t) = prod_{i<j} (1 - x_i/x_j)
/// sum_{n>=0} (t x_i / x_j)^n` and `xbar` reverses the variables.
///
/// `tparam` must be a monomial (typically `t` or `1/t`).
pub fn second_scalar(f: &SymFun, g: &SymFun, n: usize, tparam: &RatFun) -> Result<RatFun> {
    let (fnum, fden) = nvar_expansion(f, n);
    let (gnum, gden) = nvar_expansion(g, n);
    // f(xbar^{-1}): substitute x_i -> 1/x_{N+1-i}.
    let f_inv = fnum.remap_exponents(|vars, exps| {
        vars.iter()
            .zip(exps.iter())
            .map(|(&v, &e)| match v {
                Sym::X(i) => (Sym::x(n + 1 - i as usize), -e),
                other => (other, e),
            })
            .collect()
    });
    let x_vars: Vec<Sym> = (1..=n).map(Sym::x).collect();
    let mut spec = ExpansionSpec::new(x_vars.clone());
    spec.polynomial(f_inv);
    spec.polynomial(gnum);
    let t_mono = tparam
        .as_laurent()
        .filter(|p| p.is_monomial() || p.is_one())
        .expect("tparam must be a monomial");
    let (t_m, t_c) = if t_mono.is_zero() {
        panic!("tparam must be nonzero");
    } else {
        let (m, c) = t_mono.leading().unwrap();
        let pows: Vec<(Sym, i32)> = t_mono
            .vars()
            .iter()
            .zip(m.0.iter())
            .map(|(&s, &e)| (s, e))
            .collect();
        (pows, c.clone())
    };
    let deg_f = f
        .to_p()
        .coeffs()
        .keys()
        .map(|p| p.size())
        .max()
        .unwrap_or(0) as i64;
    for i in 1..=n {
        for j in (i + 1)..=n {
            spec.polynomial(
                MultiLaurent::one().sub(&MultiLaurent::monomial(
                    BigRational::one(),
                    &[(Sym::x(i), 2), (Sym::x(j), -2)],
                )),
            );
            let mut pows = t_m.clone();
            pows.push((Sym::x(i), 2));
            pows.push((Sym::x(j), -2));
            // Degree-budget bound: the pair (i,j) can absorb at most
            // deg_f * (N-1) / (j-i) units of the weight deficit.
            let bound = ((deg_f * (n as i64 - 1)) / (j as i64 - i as i64)).max(1) as u32;
            spec.geometric(t_c.clone(), &pows, bound);
        }
    }
    let ct = constant_term(&spec)?;
    RatFun::from(ct).div(&RatFun::from(fden.mul(&gden)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::scalar_qt;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn macdonald_p1_and_p2() {
        let params = params_qt();
        assert_eq!(
            macdonald_p(&pt(&[1]), &params),
            SymFun::unit(Basis::Monomial, pt(&[1]))
        );
        // P_(2) = m_2 + (1+q)(1-t)/(1-qt) m_11, frozen from the
        // orthogonality condition <P_2, P_11> = 0 solved by hand below.
        let p2 = macdonald_p(&pt(&[2]), &params);
        assert_eq!(p2.coeff(&pt(&[2])), RatFun::one());
        let q = RatFun::var(Sym::Q);
        let t = RatFun::var(Sym::T);
        let expected = RatFun::one()
            .add(&q)
            .mul(&RatFun::one().sub(&t))
            .div(&RatFun::one().sub(&q.mul(&t)))
            .unwrap();
        assert_eq!(p2.coeff(&pt(&[1, 1])), expected);

        // Independent oracle: m_2 = p_2, m_11 = (p_1^2 - p_2)/2; solve
        // <m_2 + a m_11, m_11> = 0 for a directly from the diagonal
        // power-sum products.
        let d1 = powersum_norm(&pt(&[1, 1]), &q, &t); // <p_11, p_11>
        let d2 = powersum_norm(&pt(&[2]), &q, &t); // <p_2, p_2>
        let half = RatFun::rational(BigRational::new(1.into(), 2.into()));
        let quarter = half.mul(&half);
        // <m_2, m_11> = <p_2, (p_11 - p_2)/2> = -d2/2
        let m2_m11 = d2.mul(&half).scale(&BigRational::from(num::BigInt::from(-1)));
        // <m_11, m_11> = (d1 + d2)/4
        let m11_m11 = d1.add(&d2).mul(&quarter);
        let a = m2_m11.neg().div(&m11_m11).unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn schur_and_hl_are_special_cases() {
        // P(q,q) = s and P(0,t) is unitriangular over m with the
        // Hall-Littlewood norms (checked elsewhere); spot-check s_(1^r) =
        // e_r = P_(1^r)(q,t) for r <= 4.
        for r in 1..=4usize {
            let col = Partition::column(r);
            let e = SymFun::unit(Basis::Elementary, pt(&[r as u32]))
                .convert(&Basis::Monomial);
            let s = SymFun::unit(Basis::Schur, col.clone()).convert(&Basis::Monomial);
            let p = macdonald_p(&col, &params_qt());
            assert_eq!(e, s);
            assert_eq!(e, p);
        }
        for lam in Partition::enumerate(4, None) {
            let s = SymFun::unit(Basis::Schur, lam.clone()).convert(&Basis::Monomial);
            let p = macdonald_p(&lam, &params_schur());
            assert_eq!(s, p, "P(q,q) = s at {lam}");
        }
    }

    #[test]
    fn orthogonality_and_norms_small() {
        let params = params_qt();
        let (q, t) = (RatFun::var(Sym::Q), RatFun::var(Sym::T));
        for d in 0..=3usize {
            let block = macdonald_block(d, &params);
            for (i, lam) in block.parts.iter().enumerate() {
                assert_eq!(block.norms[i], macdonald_norm(lam, &q, &t), "norm at {lam}");
                let pi = macdonald_p(lam, &params);
                for (j, mu) in block.parts.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let pj = macdonald_p(mu, &params);
                    assert!(scalar_qt(&pi, &pj, &q, &t).is_zero(), "{lam} vs {mu}");
                }
            }
        }
    }

    #[test]
    fn transition_u_example() {
        // s_2 = P_2 + (t-q)/(1-qt) P_11; the coefficient is frozen from the
        // Gram-Schmidt oracle: c = <s_2 - P_2, P_11>/<P_11,P_11> computed
        // independently via scalar products.
        let q = RatFun::var(Sym::Q);
        let t = RatFun::var(Sym::T);
        let u = transition_u_entry(&pt(&[2]), &pt(&[1, 1]), &params_schur(), &params_qt());
        let expected = t.sub(&q).div(&RatFun::one().sub(&q.mul(&t))).unwrap();
        assert_eq!(u, expected);
        let s2 = SymFun::unit(Basis::Schur, pt(&[2]));
        let p11 = macdonald_p(&pt(&[1, 1]), &params_qt());
        let oracle = scalar_qt(&s2, &p11, &q, &t)
            .div(&scalar_qt(&p11, &p11, &q, &t))
            .unwrap();
        assert_eq!(u, oracle);
        // Diagonal entries are 1; at t = q the matrix is the identity.
        assert!(transition_u_entry(&pt(&[2]), &pt(&[2]), &params_schur(), &params_qt()).is_one());
        let id = transition_u_matrix(3, &params_schur(), &params_schur());
        for (i, row) in id.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == j { RatFun::one() } else { RatFun::zero() });
            }
        }
    }

    #[test]
    fn jacobi_trudi_cross_check() {
        // s_(2) = e_1^2 - e_2 via det [[e_1, e_2], [1, e_1]].
        let v = transition_v_matrix(2, &params_schur());
        let t = degree_tables(2);
        // s_lambda = sum_mu V e_{mu^vee}; reassemble and compare in p.
        for (i, lam) in t.parts.iter().enumerate() {
            let mut acc = SymFun::zero(Basis::PowerSum);
            for (j, mu) in t.parts.iter().enumerate() {
                if v[i][j].is_zero() {
                    continue;
                }
                let e = SymFun::unit(Basis::Elementary, mu.conjugate()).to_p();
                acc = acc.add(&e.scale(&v[i][j]));
            }
            assert_eq!(acc, SymFun::unit(Basis::Schur, lam.clone()).to_p());
        }
    }

    #[test]
    fn second_scalar_trivial() {
        // <1, 1>''_{N;t} = 1: v_empty = [N]_t! cancels the factorial.
        let one = SymFun::unit(Basis::PowerSum, Partition::empty());
        for n in 1..=3usize {
            let v = second_scalar(&one, &one, n, &RatFun::var(Sym::T)).unwrap();
            assert!(v.is_one(), "N = {n}: got {v}");
        }
    }
}

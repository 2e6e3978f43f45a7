//! q-integers, q-factorials and Gaussian binomial coefficients.

use crate::exactalg::MultiLaurent;

/// `[n]_b = 1 + b + ... + b^(n-1)`.
pub fn qint(n: u32, base: &MultiLaurent) -> MultiLaurent {
    let mut acc = MultiLaurent::zero();
    let mut pow = MultiLaurent::one();
    for _ in 0..n {
        acc = acc.add(&pow);
        pow = pow.mul(base);
    }
    acc
}

/// `[n]_b! = [1]_b [2]_b ... [n]_b`.
pub fn qfactorial(n: u32, base: &MultiLaurent) -> MultiLaurent {
    let mut acc = MultiLaurent::one();
    for i in 1..=n {
        acc = acc.mul(&qint(i, base));
    }
    acc
}

/// Gaussian binomial coefficient, computed by the Pascal recurrence
/// `[n r] = [n-1 r-1] + b^r [n-1 r]` so the result is manifestly a
/// polynomial with non-negative integer coefficients.
pub fn qbinom(n: u32, r: u32, base: &MultiLaurent) -> MultiLaurent {
    if r > n {
        return MultiLaurent::zero();
    }
    let r = r.min(n - r);
    // row[k] = [m choose k] while m sweeps 0..=n
    let mut row: Vec<MultiLaurent> = vec![MultiLaurent::zero(); r as usize + 1];
    row[0] = MultiLaurent::one();
    for _m in 1..=n {
        for k in (1..=r as usize).rev() {
            let shift = base.pow(k as u32);
            row[k] = row[k - 1].add(&row[k].mul(&shift));
        }
    }
    row[r as usize].clone()
}

/// Dispatcher mirroring the external interface: kind is one of
/// `integer`, `factorial`, `binomial`.
pub fn qnumbers(kind: &str, n: u32, r: u32, base: &MultiLaurent) -> Option<MultiLaurent> {
    match kind {
        "integer" => Some(qint(n, base)),
        "factorial" => Some(qfactorial(n, base)),
        "binomial" => Some(qbinom(n, r, base)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Sym;

    fn t() -> MultiLaurent {
        MultiLaurent::var(Sym::T)
    }

    /// Product-formula oracle: prod_{i=1..r} (1-b^{n-r+i})/(1-b^i).
    fn qbinom_product(n: u32, r: u32, base: &MultiLaurent) -> MultiLaurent {
        let mut num = MultiLaurent::one();
        let mut den = MultiLaurent::one();
        for i in 1..=r {
            num = num.mul(&MultiLaurent::one().sub(&base.pow(n - r + i)));
            den = den.mul(&MultiLaurent::one().sub(&base.pow(i)));
        }
        num.exact_div(&den).expect("Gaussian binomial is a polynomial")
    }

    #[test]
    fn qint_three() {
        let expected = MultiLaurent::one().add(&t()).add(&t().pow(2));
        assert_eq!(qint(3, &t()), expected);
    }

    #[test]
    fn qbinom_four_two() {
        // 1 + t + 2t^2 + t^3 + t^4, frozen from the product formula
        let v = qbinom(4, 2, &t());
        assert_eq!(v, qbinom_product(4, 2, &t()));
        let expected = MultiLaurent::one()
            .add(&t())
            .add(&t().pow(2).scale(&num::BigRational::from(num::BigInt::from(2))))
            .add(&t().pow(3))
            .add(&t().pow(4));
        assert_eq!(v, expected);
    }

    #[test]
    fn qbinom_edges() {
        for n in 0..=6 {
            assert_eq!(qbinom(n, 0, &t()), MultiLaurent::one());
            for r in 0..=n {
                assert_eq!(qbinom(n, r, &t()), qbinom_product(n, r, &t()));
                assert!(qbinom(n, r, &t()).has_nonneg_integer_coeffs());
            }
            assert!(qbinom(n, n + 1, &t()).is_zero());
        }
    }
}

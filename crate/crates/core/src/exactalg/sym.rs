//! Symbols of the coefficient ring.
//!
//! The ambient ring is a Laurent polynomial ring over the rationals in a
//! fixed family of symbols. Exponents everywhere in this crate are stored
//! in *half units*: an exponent of `2` on `Sym::Q` means `q^1`, an exponent
//! of `1` means `q^(1/2)`. This keeps half powers such as `t^(1/2)` and
//! `v = (q/t)^(1/2)` exact monomials with integer data.

use std::fmt;

/// A symbol of the coefficient ring.
///
/// The derived `Ord` is the canonical symbol order used for the term order
/// and for serialization: `q, t, Q, c, w, p, qtilde`, then the cosmetic
/// reparametrization symbols, then the indexed alphabets `x_i`, `y_i`, `z_i`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sym {
    /// Quantum parameter `q`.
    Q,
    /// Deformation parameter `t`.
    T,
    /// Kähler parameter `Q`.
    BigQ,
    /// Boundary parameter `c` of the constant-term polynomials.
    C,
    /// Generating variable `w` for families of operators/eigenvalues.
    W,
    /// Extra deformation parameter `p`.
    P,
    /// Coloring deformation parameter `qtilde`.
    QTilde,
    /// Cosmetic output symbol `a` (reparametrized Kähler parameter).
    A,
    /// Cosmetic output symbol `bq`.
    BoldQ,
    /// Cosmetic output symbol `bt`.
    BoldT,
    /// Finite-alphabet variable `x_i` (1-based).
    X(u16),
    /// Second-alphabet variable `y_i` (1-based).
    Y(u16),
    /// Expansion variable `z_i` (1-based).
    Z(u16),
}

impl Sym {
    /// Canonical name, used in JSON `vars` lists and text output.
    pub fn name(&self) -> String {
        match self {
            Sym::Q => "q".into(),
            Sym::T => "t".into(),
            Sym::BigQ => "Q".into(),
            Sym::C => "c".into(),
            Sym::W => "w".into(),
            Sym::P => "p".into(),
            Sym::QTilde => "qtilde".into(),
            Sym::A => "a".into(),
            Sym::BoldQ => "bq".into(),
            Sym::BoldT => "bt".into(),
            Sym::X(i) => format!("x{i}"),
            Sym::Y(i) => format!("y{i}"),
            Sym::Z(i) => format!("z{i}"),
        }
    }

    /// Parses a canonical name back into a symbol.
    pub fn parse(name: &str) -> Option<Sym> {
        match name {
            "q" => return Some(Sym::Q),
            "t" => return Some(Sym::T),
            "Q" => return Some(Sym::BigQ),
            "c" => return Some(Sym::C),
            "w" => return Some(Sym::W),
            "p" => return Some(Sym::P),
            "qtilde" => return Some(Sym::QTilde),
            "a" => return Some(Sym::A),
            "bq" => return Some(Sym::BoldQ),
            "bt" => return Some(Sym::BoldT),
            _ => {}
        }
        let (head, tail) = name.split_at(1);
        let idx: u16 = tail.parse().ok().filter(|i| *i >= 1)?;
        match head {
            "x" => Some(Sym::X(idx)),
            "y" => Some(Sym::Y(idx)),
            "z" => Some(Sym::Z(idx)),
            _ => None,
        }
    }

    /// The `i`-th expansion variable, 1-based.
    pub fn z(i: usize) -> Sym {
        Sym::Z(u16::try_from(i).expect("z index"))
    }

    /// The `i`-th finite-alphabet variable, 1-based.
    pub fn x(i: usize) -> Sym {
        Sym::X(u16::try_from(i).expect("x index"))
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let mut syms = vec![Sym::Z(1), Sym::T, Sym::X(2), Sym::Q, Sym::BigQ, Sym::X(1)];
        syms.sort();
        assert_eq!(
            syms,
            vec![Sym::Q, Sym::T, Sym::BigQ, Sym::X(1), Sym::X(2), Sym::Z(1)]
        );
    }

    #[test]
    fn name_roundtrip() {
        for s in [Sym::Q, Sym::QTilde, Sym::X(3), Sym::Z(12), Sym::BoldT] {
            assert_eq!(Sym::parse(&s.name()), Some(s));
        }
        assert_eq!(Sym::parse("z0"), None);
        assert_eq!(Sym::parse("foo"), None);
    }
}

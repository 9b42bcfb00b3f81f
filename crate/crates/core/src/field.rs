//! Exact arithmetic in GF(2), GF(3) and GF(4), and their field automorphisms.
//!
//! Elements carry their field at runtime, so mixing fields is a typed error
//! instead of a silent wrap. GF(4) is {0, 1, w, w2} with w2 = w + 1; addition
//! is XOR on the two-bit encoding and multiplication is a lookup table.

use std::fmt;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Gf2,
    Gf3,
    Gf4,
}

// Multiplication table for GF(4) under the encoding 0, 1, w = 2, w2 = 3.
const MUL4: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl FieldKind {
    pub const ALL: [FieldKind; 3] = [FieldKind::Gf2, FieldKind::Gf3, FieldKind::Gf4];

    pub fn order(self) -> u8 {
        match self {
            FieldKind::Gf2 => 2,
            FieldKind::Gf3 => 3,
            FieldKind::Gf4 => 4,
        }
    }

    pub fn characteristic(self) -> u8 {
        match self {
            FieldKind::Gf3 => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldKind::Gf2 => "GF2",
            FieldKind::Gf3 => "GF3",
            FieldKind::Gf4 => "GF4",
        }
    }

    /// Parses a field name as it appears in file headers. Case-sensitive.
    pub fn from_name(name: &str) -> Option<FieldKind> {
        match name {
            "GF2" => Some(FieldKind::Gf2),
            "GF3" => Some(FieldKind::Gf3),
            "GF4" => Some(FieldKind::Gf4),
            _ => None,
        }
    }

    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.order()).map(move |v| FieldElement {
            kind: self,
            value: v,
        })
    }

    pub(crate) fn add_raw(self, a: u8, b: u8) -> u8 {
        match self {
            FieldKind::Gf2 | FieldKind::Gf4 => a ^ b,
            FieldKind::Gf3 => (a + b) % 3,
        }
    }

    pub(crate) fn neg_raw(self, a: u8) -> u8 {
        match self {
            FieldKind::Gf2 | FieldKind::Gf4 => a,
            FieldKind::Gf3 => (3 - a) % 3,
        }
    }

    pub(crate) fn sub_raw(self, a: u8, b: u8) -> u8 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(self, a: u8, b: u8) -> u8 {
        match self {
            FieldKind::Gf2 => a & b,
            FieldKind::Gf3 => (a * b) % 3,
            FieldKind::Gf4 => MUL4[a as usize][b as usize],
        }
    }

    /// None exactly when `a` is zero.
    pub(crate) fn inv_raw(self, a: u8) -> Option<u8> {
        if a == 0 {
            return None;
        }
        Some(match self {
            FieldKind::Gf2 => 1,
            FieldKind::Gf3 => a, // 1*1 = 1, 2*2 = 4 = 1
            FieldKind::Gf4 => MUL4[a as usize][a as usize], // a^3 = 1, so a^-1 = a^2
        })
    }

    pub(crate) fn token_of(self, value: u8) -> &'static str {
        match (self, value) {
            (_, 0) => "0",
            (_, 1) => "1",
            (FieldKind::Gf3, 2) => "2",
            (FieldKind::Gf4, 2) => "w",
            (FieldKind::Gf4, 3) => "w2",
            _ => unreachable!("value out of range for field"),
        }
    }

    pub(crate) fn value_of_token(self, token: &str) -> Option<u8> {
        let v = match (self, token) {
            (_, "0") => 0,
            (_, "1") => 1,
            (FieldKind::Gf3, "2") => 2,
            (FieldKind::Gf4, "w") => 2,
            (FieldKind::Gf4, "w2") => 3,
            _ => return None,
        };
        Some(v)
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    kind: FieldKind,
    value: u8,
}

impl FieldElement {
    pub fn new(kind: FieldKind, value: u8) -> Result<FieldElement, Error> {
        if value < kind.order() {
            Ok(FieldElement { kind, value })
        } else {
            Err(Error::BadElement { kind, value })
        }
    }

    pub fn zero(kind: FieldKind) -> FieldElement {
        FieldElement { kind, value: 0 }
    }

    pub fn one(kind: FieldKind) -> FieldElement {
        FieldElement { kind, value: 1 }
    }

    pub fn from_token(kind: FieldKind, token: &str) -> Result<FieldElement, Error> {
        match kind.value_of_token(token) {
            Some(value) => Ok(FieldElement { kind, value }),
            None => Err(Error::BadToken {
                kind,
                token: token.to_string(),
            }),
        }
    }

    pub fn kind(self) -> FieldKind {
        self.kind
    }

    /// Canonical encoding: 0..order, with GF(4) using w = 2, w2 = 3.
    pub fn value(self) -> u8 {
        self.value
    }

    pub fn token(self) -> &'static str {
        self.kind.token_of(self.value)
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check_kind(self, other: FieldElement) -> Result<(), Error> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                expected: self.kind,
                found: other.kind,
            })
        }
    }

    // Mixing fields is an error, so these are fallible and cannot take the
    // infallible std operator traits.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, rhs: FieldElement) -> Result<FieldElement, Error> {
        self.check_kind(rhs)?;
        Ok(FieldElement {
            kind: self.kind,
            value: self.kind.add_raw(self.value, rhs.value),
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, rhs: FieldElement) -> Result<FieldElement, Error> {
        self.check_kind(rhs)?;
        Ok(FieldElement {
            kind: self.kind,
            value: self.kind.sub_raw(self.value, rhs.value),
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: FieldElement) -> Result<FieldElement, Error> {
        self.check_kind(rhs)?;
        Ok(FieldElement {
            kind: self.kind,
            value: self.kind.mul_raw(self.value, rhs.value),
        })
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> FieldElement {
        FieldElement {
            kind: self.kind,
            value: self.kind.neg_raw(self.value),
        }
    }

    pub fn inverse(self) -> Result<FieldElement, Error> {
        match self.kind.inv_raw(self.value) {
            Some(value) => Ok(FieldElement {
                kind: self.kind,
                value,
            }),
            None => Err(Error::DivisionByZero { kind: self.kind }),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AutoMap {
    Identity,
    Inversion,
}

/// A field automorphism, closed under the operations we need: the identity
/// on every field, and on GF(4) additionally x -> x^2, which inverts every
/// nonzero element. Both are involutions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Automorphism {
    kind: FieldKind,
    map: AutoMap,
}

impl Automorphism {
    pub fn identity(kind: FieldKind) -> Automorphism {
        Automorphism {
            kind,
            map: AutoMap::Identity,
        }
    }

    /// The unique non-identity automorphism of GF(4). GF(2) and GF(3) have
    /// none, which is reported as an error.
    pub fn inversion(kind: FieldKind) -> Result<Automorphism, Error> {
        match kind {
            FieldKind::Gf4 => Ok(Automorphism {
                kind,
                map: AutoMap::Inversion,
            }),
            _ => Err(Error::NoInversionAutomorphism { kind }),
        }
    }

    /// The automorphism acting as x -> x^-1 on nonzero elements. For GF(2)
    /// and GF(3) that map *is* the identity; for GF(4) it is `inversion`.
    pub fn inverting(kind: FieldKind) -> Automorphism {
        match kind {
            FieldKind::Gf4 => Automorphism {
                kind,
                map: AutoMap::Inversion,
            },
            _ => Automorphism {
                kind,
                map: AutoMap::Identity,
            },
        }
    }

    pub fn kind(self) -> FieldKind {
        self.kind
    }

    pub fn is_identity(self) -> bool {
        self.map == AutoMap::Identity
    }

    pub fn name(self) -> &'static str {
        match self.map {
            AutoMap::Identity => "id",
            AutoMap::Inversion => "inv",
        }
    }

    pub fn apply(self, x: FieldElement) -> Result<FieldElement, Error> {
        if x.kind != self.kind {
            return Err(Error::FieldMismatch {
                expected: self.kind,
                found: x.kind,
            });
        }
        Ok(FieldElement {
            kind: x.kind,
            value: self.apply_raw(x.value),
        })
    }

    pub(crate) fn apply_raw(self, v: u8) -> u8 {
        match self.map {
            AutoMap::Identity => v,
            // Squaring permutes GF(4) as 0, 1, w2, w.
            AutoMap::Inversion => [0, 1, 3, 2][v as usize],
        }
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(kind: FieldKind, token: &str) -> FieldElement {
        FieldElement::from_token(kind, token).unwrap()
    }

    #[test]
    fn field_axioms_hold_exhaustively() {
        for kind in FieldKind::ALL {
            let zero = FieldElement::zero(kind);
            let one = FieldElement::one(kind);
            for a in kind.elements() {
                assert_eq!(a.add(zero).unwrap(), a);
                assert_eq!(a.mul(one).unwrap(), a);
                assert_eq!(a.add(a.neg()).unwrap(), zero, "additive inverse of {a:?}");
                if !a.is_zero() {
                    assert_eq!(a.mul(a.inverse().unwrap()).unwrap(), one);
                }
                for b in kind.elements() {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    assert_eq!(a.sub(b).unwrap(), a.add(b.neg()).unwrap());
                    for c in kind.elements() {
                        assert_eq!(
                            a.add(b).unwrap().add(c).unwrap(),
                            a.add(b.add(c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.mul(b).unwrap().mul(c).unwrap(),
                            a.mul(b.mul(c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.mul(b.add(c).unwrap()).unwrap(),
                            a.mul(b).unwrap().add(a.mul(c).unwrap()).unwrap(),
                            "distributivity in {kind}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn characteristic_matches_field() {
        for kind in FieldKind::ALL {
            let ch = kind.characteristic();
            for a in kind.elements() {
                let mut acc = FieldElement::zero(kind);
                for _ in 0..ch {
                    acc = acc.add(a).unwrap();
                }
                assert!(acc.is_zero(), "char({kind}) = {ch}");
            }
        }
    }

    #[test]
    fn gf4_multiplication_facts() {
        let w = el(FieldKind::Gf4, "w");
        let w2 = el(FieldKind::Gf4, "w2");
        let one = FieldElement::one(FieldKind::Gf4);
        assert_eq!(w.mul(w).unwrap(), w2);
        assert_eq!(w.mul(w2).unwrap(), one);
        assert_eq!(w2.mul(w2).unwrap(), w);
        assert_eq!(w.add(one).unwrap(), w2);
        // Characteristic two: every element is its own negative.
        assert_eq!(one.neg(), one);
        assert_eq!(w.neg(), w);
    }

    #[test]
    fn gf3_negation_and_inverses() {
        let one = el(FieldKind::Gf3, "1");
        let two = el(FieldKind::Gf3, "2");
        assert_eq!(one.neg(), two);
        assert_eq!(two.neg(), one);
        assert_eq!(two.inverse().unwrap(), two);
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn inversion_is_an_involutive_automorphism_fixing_zero_and_one() {
        let inv = Automorphism::inversion(FieldKind::Gf4).unwrap();
        for a in FieldKind::Gf4.elements() {
            let ia = inv.apply(a).unwrap();
            assert_eq!(inv.apply(ia).unwrap(), a, "involution at {a:?}");
            if !a.is_zero() {
                assert_eq!(ia, a.inverse().unwrap(), "inversion maps x to x^-1");
            }
            // Fixed points are exactly 0 and 1.
            assert_eq!(
                ia == a,
                a.is_zero() || a == FieldElement::one(FieldKind::Gf4)
            );
            for b in FieldKind::Gf4.elements() {
                assert_eq!(
                    inv.apply(a.add(b).unwrap()).unwrap(),
                    ia.add(inv.apply(b).unwrap()).unwrap()
                );
                assert_eq!(
                    inv.apply(a.mul(b).unwrap()).unwrap(),
                    ia.mul(inv.apply(b).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn inversion_only_exists_over_gf4() {
        assert!(Automorphism::inversion(FieldKind::Gf4).is_ok());
        for kind in [FieldKind::Gf2, FieldKind::Gf3] {
            assert_eq!(
                Automorphism::inversion(kind),
                Err(Error::NoInversionAutomorphism { kind })
            );
            assert!(Automorphism::inverting(kind).is_identity());
        }
        assert!(!Automorphism::inverting(FieldKind::Gf4).is_identity());
    }

    #[test]
    fn tokens_round_trip_and_reject_junk() {
        for kind in FieldKind::ALL {
            for a in kind.elements() {
                assert_eq!(FieldElement::from_token(kind, a.token()).unwrap(), a);
            }
        }
        for bad in ["W", "w3", "02", "", "w 2", "-1"] {
            assert!(FieldElement::from_token(FieldKind::Gf4, bad).is_err());
        }
        // Tokens of one field are not silently accepted by another.
        assert!(FieldElement::from_token(FieldKind::Gf2, "2").is_err());
        assert!(FieldElement::from_token(FieldKind::Gf3, "w").is_err());
    }

    #[test]
    fn cross_field_arithmetic_is_rejected() {
        let a = FieldElement::one(FieldKind::Gf2);
        let b = FieldElement::one(FieldKind::Gf4);
        assert_eq!(
            a.add(b),
            Err(Error::FieldMismatch {
                expected: FieldKind::Gf2,
                found: FieldKind::Gf4
            })
        );
        let id2 = Automorphism::identity(FieldKind::Gf2);
        assert!(id2.apply(b).is_err());
    }

    #[test]
    fn out_of_range_encodings_are_rejected() {
        assert!(FieldElement::new(FieldKind::Gf2, 2).is_err());
        assert!(FieldElement::new(FieldKind::Gf3, 3).is_err());
        assert!(FieldElement::new(FieldKind::Gf4, 4).is_err());
        assert!(FieldElement::new(FieldKind::Gf4, 3).is_ok());
    }

    #[test]
    fn zero_has_no_inverse() {
        for kind in FieldKind::ALL {
            assert_eq!(
                FieldElement::zero(kind).inverse(),
                Err(Error::DivisionByZero { kind })
            );
        }
    }
}

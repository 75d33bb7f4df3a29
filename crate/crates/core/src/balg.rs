//! The Boolean algebra of clopen traces on a closed family.
//!
//! Elements are clopen sets taken modulo equal intersection with the
//! carrier. The algebra is never materialized; every query is answered on
//! automata.

use crate::automaton::PathAutomaton;
use crate::cantor::Clopen;
use crate::error::{Error, Result};
use crate::ordinal::{Ordinal, RankValue};

#[derive(Clone, Debug)]
pub struct TraceAlgebra {
    carrier: PathAutomaton,
}

impl TraceAlgebra {
    pub fn new(carrier: PathAutomaton) -> Self {
        Self { carrier }
    }

    pub fn carrier(&self) -> &PathAutomaton {
        &self.carrier
    }

    pub fn trace(&self, c: &Clopen) -> PathAutomaton {
        self.carrier.restrict(c)
    }

    pub fn trace_eq(&self, a: &Clopen, b: &Clopen) -> bool {
        self.trace(a).set_eq(&self.trace(b))
    }

    /// An atom is a clopen whose trace is a single point.
    pub fn is_atom(&self, c: &Clopen) -> bool {
        let r = self.trace(c).rank_degree();
        r.rank == RankValue::finite(0) && r.degree == Some(1)
    }

    /// Superatomic exactly when the perfect kernel of the carrier is empty.
    pub fn is_superatomic(&self) -> bool {
        self.carrier.kernel().is_empty()
    }

    /// The pair (rank, degree) of a nonempty superatomic algebra.
    pub fn cb_invariants(&self) -> Result<(Ordinal, u64)> {
        if !self.is_superatomic() {
            return Err(Error::NotSuperatomic(
                "the carrier has a nonempty perfect kernel".into(),
            ));
        }
        let r = self.carrier.rank_degree();
        match r.rank {
            RankValue::Ord(alpha) => Ok((alpha, r.degree.unwrap() as u64)),
            _ => Err(Error::Precondition("the carrier is empty".into())),
        }
    }

    /// Countable superatomic algebras are isomorphic iff their invariants
    /// agree.
    pub fn iso_equivalent(&self, other: &Self) -> Result<bool> {
        Ok(self.cb_invariants()? == other.cb_invariants()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::FamilyExpr;

    fn carrier(s: &str) -> TraceAlgebra {
        TraceAlgebra::new(s.parse::<FamilyExpr>().unwrap().compile().unwrap())
    }

    fn c(s: &str) -> Clopen {
        s.parse().unwrap()
    }

    #[test]
    fn trace_equality() {
        let h = carrier("canon(1,1)");
        assert!(h.trace_eq(&c("[0*]"), &c("[00*]")));
        assert!(h.trace_eq(&c("[10*]"), &c("[10*]")));
        assert!(!h.trace_eq(&c("[0*]"), &c("[1*]")));
        let full = carrier("full");
        assert!(!full.trace_eq(&c("[0*]"), &c("[1*]")));
    }

    #[test]
    fn trace_equality_is_a_congruence() {
        let h = carrier("canon(2,1)");
        let pairs = [("[000*]", "[00*]"), ("[010*, 1*]", "[0100*, 1*]")];
        let others = ["[1*]", "[01*, 11*]", "[110*]", "[*]", "[]"];
        for (a, b) in pairs {
            let (a, b) = (c(a), c(b));
            assert!(h.trace_eq(&a, &b));
            assert!(h.trace_eq(&a.complement(), &b.complement()));
            for d in others {
                let d = c(d);
                assert!(h.trace_eq(&a.union(&d), &b.union(&d)));
                assert!(h.trace_eq(&a.intersection(&d), &b.intersection(&d)));
            }
        }
    }

    #[test]
    fn atoms() {
        let h = carrier("canon(1,1)");
        assert!(h.is_atom(&c("[10*]")));
        assert!(!h.is_atom(&Clopen::full()));
        assert!(!h.is_atom(&c("[11*]")));
        let full = carrier("full");
        assert!(!full.is_atom(&c("[0110*]")));
    }

    #[test]
    fn superatomic() {
        assert!(carrier("canon(3,1)").is_superatomic());
        assert!(!carrier("full").is_superatomic());
        assert!(!carrier("union(0:canon(1,1), 1:full)").is_superatomic());
    }

    #[test]
    fn invariants() {
        assert_eq!(
            carrier("canon(2,1)").cb_invariants().unwrap(),
            (Ordinal::finite(2), 1)
        );
        assert_eq!(
            carrier("canon(1,3)").cb_invariants().unwrap(),
            (Ordinal::finite(1), 3)
        );
        assert_eq!(
            carrier("point(01(1)^w)").cb_invariants().unwrap(),
            (Ordinal::zero(), 1)
        );
        assert!(matches!(
            carrier("full").cb_invariants(),
            Err(Error::NotSuperatomic(_))
        ));
        assert!(matches!(
            carrier("empty").cb_invariants(),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn isomorphism() {
        let a = carrier("canon(2,1)");
        // rank 2, degree 1 with an extra rank-1 point
        let b = carrier("union(0:canon(2,1), 1:canon(1,1))");
        assert!(a.iso_equivalent(&b).unwrap());
        assert!(!carrier("canon(1,1)")
            .iso_equivalent(&carrier("canon(1,2)"))
            .unwrap());
        assert!(matches!(
            carrier("canon(1,1)").iso_equivalent(&carrier("full")),
            Err(Error::NotSuperatomic(_))
        ));
    }
}

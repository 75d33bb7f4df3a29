use super::{canon_expand, FamilyExpr};
use crate::automaton::{PathAutomaton, RawAutomaton, StateId};
use crate::cantor::UpWord;
use crate::error::{Error, Result};

impl FamilyExpr {
    /// The first subterm that has no finite automaton: a `diag` or a
    /// `canon` with an infinite ordinal.
    pub fn non_compilable_subterm(&self) -> Option<&FamilyExpr> {
        match self {
            Self::DiagSum(_) => Some(self),
            Self::Canon(alpha, _) if alpha.as_finite().is_none() => Some(self),
            Self::DisjointUnion(branches) => branches
                .iter()
                .find_map(|(_, e)| e.non_compilable_subterm()),
            Self::OmegaSum(sub) => sub.non_compilable_subterm(),
            _ => None,
        }
    }

    pub fn is_compilable(&self) -> bool {
        self.non_compilable_subterm().is_none()
    }

    /// An automaton whose path set is the topological closure of the
    /// generators.
    pub fn compile(&self) -> Result<PathAutomaton> {
        if let Some(bad) = self.non_compilable_subterm() {
            return Err(Error::NotCompilable(bad.to_string()));
        }
        let mut raw = RawAutomaton::new();
        if let Some(root) = build(self, &mut raw) {
            raw.set_root(root);
        }
        Ok(raw.prune())
    }
}

fn build(expr: &FamilyExpr, raw: &mut RawAutomaton) -> Option<StateId> {
    match expr {
        FamilyExpr::Empty => None,
        FamilyExpr::Singleton(w) => Some(lasso(w, raw)),
        FamilyExpr::FullSpace => {
            let q = raw.add_anon();
            raw.set_edge(q, 0, q);
            raw.set_edge(q, 1, q);
            Some(q)
        }
        FamilyExpr::DisjointUnion(branches) => {
            let refs: Vec<(&[u8], &FamilyExpr)> =
                branches.iter().map(|(p, e)| (p.as_slice(), e)).collect();
            trie(&refs, raw)
        }
        FamilyExpr::OmegaSum(sub) => {
            let inner = build(sub, raw)?;
            let r = raw.add_anon();
            raw.set_edge(r, 1, r);
            raw.set_edge(r, 0, inner);
            Some(r)
        }
        FamilyExpr::Canon(alpha, n) => build(&canon_expand(alpha, *n), raw),
        FamilyExpr::DiagSum(_) => unreachable!("rejected before building"),
    }
}

fn lasso(w: &UpWord, raw: &mut RawAutomaton) -> StateId {
    let bits: Vec<u8> = w.prefix().iter().chain(w.period()).copied().collect();
    let states: Vec<StateId> = bits.iter().map(|_| raw.add_anon()).collect();
    for (i, &bit) in bits.iter().enumerate() {
        let next = states
            .get(i + 1)
            .copied()
            .unwrap_or(states[w.prefix().len()]);
        raw.set_edge(states[i], bit, next);
    }
    states[0]
}

/// Grafts each branch below its prefix. Prefixes are pairwise
/// incomparable, so an exhausted prefix is the only branch left.
fn trie(branches: &[(&[u8], &FamilyExpr)], raw: &mut RawAutomaton) -> Option<StateId> {
    if let [(prefix, sub)] = branches {
        if prefix.is_empty() {
            return build(sub, raw);
        }
    }
    let q = raw.add_anon();
    let mut any = false;
    for bit in 0..2u8 {
        let children: Vec<(&[u8], &FamilyExpr)> = branches
            .iter()
            .filter(|(p, _)| p.first() == Some(&bit))
            .map(|(p, e)| (&p[1..], *e))
            .collect();
        if children.is_empty() {
            continue;
        }
        if let Some(t) = trie(&children, raw) {
            raw.set_edge(q, bit, t);
            any = true;
        }
    }
    any.then_some(q)
}

use std::fmt::Write;

use super::PathAutomaton;

/// Graphviz rendering: one node per state, the root drawn as a double
/// circle, edges labelled `0`/`1`.
pub fn to_dot(automaton: &PathAutomaton, title: &str) -> String {
    let mut s = String::new();
    writeln!(s, "digraph \"{}\" {{", title.replace('"', "'")).unwrap();
    s.push_str("  rankdir=LR;\n  node [shape=circle];\n");
    for q in automaton.states() {
        let shape = if Some(q) == automaton.root() {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(s, "  \"{}\" [shape={shape}];", automaton.name(q)).unwrap();
    }
    for q in automaton.states() {
        for (bit, t) in automaton.successors(q) {
            writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{bit}\"];",
                automaton.name(q),
                automaton.name(t)
            )
            .unwrap();
        }
    }
    s.push_str("}\n");
    s
}

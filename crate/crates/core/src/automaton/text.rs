use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{PathAutomaton, RawAutomaton};
use crate::error::Error;

impl RawAutomaton {
    /// Parses the line-based format:
    ///
    /// ```text
    /// state q0
    /// state q1
    /// root q0
    /// edge q0 1 q0
    /// edge q0 0 q1
    /// edge q1 0 q1
    /// ```
    ///
    /// Lines may appear in any order; `#` starts a comment. A file without
    /// states denotes the empty family.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let fail = |line: usize, message: String| Error::AutomatonFormat { line, message };
        let mut raw = RawAutomaton::new();
        let mut ids: HashMap<String, usize> = HashMap::new();
        let mut root: Option<(usize, String)> = None;
        let mut edges = Vec::new();

        for (i, line) in text.lines().enumerate() {
            let lineno = i + 1;
            let content = line.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            match fields.as_slice() {
                ["state", name] => {
                    if ids.contains_key(*name) {
                        return Err(fail(lineno, format!("duplicate state `{name}`")));
                    }
                    ids.insert(name.to_string(), raw.add_state(*name));
                }
                ["root", name] => {
                    if root.is_some() {
                        return Err(fail(lineno, "more than one root".into()));
                    }
                    root = Some((lineno, name.to_string()));
                }
                ["edge", from, bit, to] => {
                    let bit = match *bit {
                        "0" => 0u8,
                        "1" => 1u8,
                        other => {
                            return Err(fail(
                                lineno,
                                format!("edge label must be 0 or 1, got `{other}`"),
                            ))
                        }
                    };
                    edges.push((lineno, from.to_string(), bit, to.to_string()));
                }
                _ => return Err(fail(lineno, format!("unrecognized line `{content}`"))),
            }
        }

        let lookup = |line: usize, name: &str| {
            ids.get(name)
                .copied()
                .ok_or_else(|| fail(line, format!("undeclared state `{name}`")))
        };
        for (line, from, bit, to) in edges {
            let (p, q) = (lookup(line, &from)?, lookup(line, &to)?);
            match raw.edge(p, bit) {
                Some(existing) if existing != q => {
                    return Err(fail(line, format!("state `{from}` has two {bit}-edges")))
                }
                _ => raw.set_edge(p, bit, q),
            }
        }
        match root {
            Some((line, name)) => raw.set_root(lookup(line, &name)?),
            None if !raw.is_empty() => return Err(fail(0, "missing `root` line".into())),
            None => {}
        }
        Ok(raw)
    }
}

impl FromStr for PathAutomaton {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RawAutomaton::parse(s).map(|raw| raw.prune())
    }
}

impl fmt::Display for PathAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in self.states() {
            writeln!(f, "state {}", self.name(q))?;
        }
        if let Some(r) = self.root() {
            writeln!(f, "root {}", self.name(r))?;
        }
        for q in self.states() {
            for (bit, t) in self.successors(q) {
                writeln!(f, "edge {} {} {}", self.name(q), bit, self.name(t))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CANON1: &str = "state q0\nstate q1\nroot q0\nedge q0 1 q0\nedge q0 0 q1\nedge q1 0 q1\n";

    #[test]
    fn parses_example_file() {
        let a: PathAutomaton = CANON1.parse().unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(
            a.to_string(),
            "state q0\nstate q1\nroot q0\nedge q0 0 q1\nedge q0 1 q0\nedge q1 0 q1\n"
        );
        let reparsed: PathAutomaton = a.to_string().parse().unwrap();
        assert!(reparsed.set_eq(&a));
    }

    #[test]
    fn order_insensitive() {
        let shuffled =
            "edge q1 0 q1\n# comment\nroot q0\nedge q0 0 q1\n\nstate q1\nedge q0 1 q0\nstate q0\n";
        let a: PathAutomaton = shuffled.parse().unwrap();
        assert!(a.set_eq(&CANON1.parse().unwrap()));
    }

    #[test]
    fn empty_file_is_empty_family() {
        assert!("".parse::<PathAutomaton>().unwrap().is_empty());
        assert!("# nothing\n".parse::<PathAutomaton>().unwrap().is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line_of = |s: &str| match s.parse::<PathAutomaton>() {
            Err(Error::AutomatonFormat { line, .. }) => line,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(line_of("state a\nroot a\nedge a 2 a\n"), 3);
        assert_eq!(line_of("state a\nroot a\nedge a 0 b\n"), 3);
        assert_eq!(line_of("state a\nstate a\n"), 2);
        assert_eq!(
            line_of("state a\nstate b\nroot a\nedge a 0 a\nedge a 0 b\n"),
            5
        );
        assert_eq!(line_of("state a\nbogus\n"), 2);
        assert_eq!(line_of("state a\nedge a 0 a\n"), 0);
        assert_eq!(line_of("root a\nroot a\n"), 2);
    }
}

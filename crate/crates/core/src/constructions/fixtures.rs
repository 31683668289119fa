//! Plain-text fixture formats and the fixture files shipped with the crate.
//!
//! A descriptor has a `graph6 <string>` line and named sections `[name]`
//! holding either Latin-square rows or coloring lines
//! `color <idx>: <vertices>`. Lines starting with `#` are comments.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

pub const PAULUS_2512: &str = include_str!("../../fixtures/paulus_2512.txt");
pub const PAULUS_2512_ADJACENCY: &str = include_str!("../../fixtures/paulus_2512_adjacency.txt");
pub const PAULUS_2502: &str = include_str!("../../fixtures/paulus_2502.txt");
pub const APPENDIX_A_T: &str = include_str!("../../fixtures/appendix_a_t.txt");
pub const APPENDIX_A_T_PRIME: &str = include_str!("../../fixtures/appendix_a_t_prime.txt");
pub const APPENDIX_A_TREES: &str = include_str!("../../fixtures/appendix_a_trees.txt");

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Descriptor {
    pub graph6: String,
    sections: BTreeMap<String, Vec<String>>,
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("descriptor line {line}: {msg}"))
}

impl Descriptor {
    pub fn parse(text: &str) -> Result<Descriptor> {
        let mut d = Descriptor::default();
        let mut current: Option<String> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                if d.sections.insert(name.to_string(), Vec::new()).is_some() {
                    return Err(parse_err(i + 1, format!("duplicate section {name}")));
                }
                current = Some(name.to_string());
            } else if let Some(s) = line.strip_prefix("graph6 ") {
                d.graph6 = s.trim().to_string();
            } else if let Some(name) = &current {
                d.sections.get_mut(name).expect("section exists").push(line.to_string());
            } else {
                return Err(parse_err(i + 1, "content outside a section"));
            }
        }
        if d.graph6.is_empty() {
            return Err(Error::Parse("descriptor has no graph6 line".into()));
        }
        Ok(d)
    }

    pub fn graph(&self) -> Result<Graph> {
        parse_graph6(self.graph6.as_bytes())
    }

    pub fn section_names(&self) -> impl Iterator<Item = &str> {
        self.sections.keys().map(String::as_str)
    }

    fn section(&self, name: &str) -> Result<&[String]> {
        self.sections.get(name).map(Vec::as_slice).ok_or_else(|| Error::UnknownName(format!("section {name}")))
    }

    /// Color classes of a coloring section, ordered by color index `1, 2, …`.
    pub fn coloring(&self, name: &str) -> Result<Vec<Vec<usize>>> {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for line in self.section(name)? {
            let rest = line
                .strip_prefix("color ")
                .ok_or_else(|| Error::Parse(format!("[{name}]: expected `color <idx>: <vertices>`, got `{line}`")))?;
            let (idx, verts) =
                rest.split_once(':').ok_or_else(|| Error::Parse(format!("[{name}]: missing ':' in `{line}`")))?;
            let idx: usize = idx.trim().parse().map_err(|e| Error::Parse(format!("[{name}]: color index: {e}")))?;
            let verts = verts
                .split_whitespace()
                .map(|v| v.parse::<usize>().map_err(|e| Error::Parse(format!("[{name}]: vertex: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            if classes.insert(idx, verts).is_some() {
                return Err(Error::Parse(format!("[{name}]: color {idx} listed twice")));
            }
        }
        let expected: Vec<usize> = (1..=classes.len()).collect();
        if classes.keys().copied().collect::<Vec<_>>() != expected {
            return Err(Error::Parse(format!("[{name}]: color indices must be 1..={}", classes.len())));
        }
        Ok(classes.into_values().collect())
    }

    /// Rows of a Latin-square section.
    pub fn latin_square(&self, name: &str) -> Result<Vec<Vec<u32>>> {
        self.section(name)?
            .iter()
            .map(|l| {
                l.split_whitespace()
                    .map(|v| v.parse::<u32>().map_err(|e| Error::Parse(format!("[{name}]: {e}"))))
                    .collect()
            })
            .collect()
    }
}

/// A whitespace-separated integer grid, one row per line.
pub fn parse_grid(text: &str) -> Result<Vec<Vec<BigUint>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|v| v.parse::<BigUint>().map_err(|e| Error::Parse(format!("grid entry `{v}`: {e}"))))
                .collect()
        })
        .collect()
}

/// Reads a 0/1 adjacency matrix grid.
pub fn parse_adjacency(text: &str) -> Result<Graph> {
    let rows: Vec<Vec<u8>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|v| v.parse::<u8>().map_err(|e| Error::Parse(format!("adjacency entry `{v}`: {e}"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    Graph::from_adjacency(&rows)
}

/// `(label, graph6)` lines of the tree fixture.
pub fn appendix_a_trees() -> Result<(Graph, Graph)> {
    let mut graphs = APPENDIX_A_TREES
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (_, g6) = l.split_once(' ').ok_or_else(|| Error::Parse(format!("tree line `{l}`")))?;
            parse_graph6(g6.trim().as_bytes())
        });
    let t = graphs.next().ok_or_else(|| Error::Parse("tree fixture is empty".into()))??;
    let t2 = graphs.next().ok_or_else(|| Error::Parse("tree fixture has one tree".into()))??;
    Ok((t, t2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{latin_square_graph, srg_parameters, SrgParams};

    const PARAMS: SrgParams = SrgParams { n: 25, d: 12, lambda: 5, mu: 6 };

    #[test]
    fn paulus_2512_sources_coincide() {
        let d = Descriptor::parse(PAULUS_2512).unwrap();
        let from_g6 = d.graph().unwrap();
        let from_matrix = parse_adjacency(PAULUS_2512_ADJACENCY).unwrap();
        let from_latin = latin_square_graph(&d.latin_square("latin").unwrap()).unwrap();
        assert_eq!(from_g6, from_matrix);
        assert_eq!(from_g6, from_latin);
        assert_eq!(srg_parameters(&from_g6), Some(PARAMS));
        assert_eq!(d.coloring("A2").unwrap(), vec![vec![0], vec![2]]);
        assert_eq!(d.coloring("B2s").unwrap(), vec![vec![2], vec![12]]);
        assert_eq!(d.coloring("B1").unwrap(), vec![vec![0], vec![5], vec![10]]);
    }

    #[test]
    fn paulus_2502_parses() {
        let d = Descriptor::parse(PAULUS_2502).unwrap();
        assert_eq!(srg_parameters(&d.graph().unwrap()), Some(PARAMS));
        assert_eq!(d.coloring("A3").unwrap(), vec![vec![1, 5]]);
        assert_eq!(d.coloring("B3").unwrap(), vec![vec![2, 21]]);
    }

    #[test]
    fn grids_have_appendix_shape() {
        for text in [APPENDIX_A_T, APPENDIX_A_T_PRIME] {
            let grid = parse_grid(text).unwrap();
            assert_eq!(grid.len(), 19);
            assert!(grid.iter().all(|r| r.len() == 10));
        }
        let (t, t2) = appendix_a_trees().unwrap();
        assert_eq!((t.n(), t2.n()), (19, 19));
        assert_eq!((t.edge_count(), t2.edge_count()), (18, 18));
    }

    #[test]
    fn malformed_descriptors() {
        assert!(Descriptor::parse("[x]\ncolor 1: 0\n").is_err());
        assert!(Descriptor::parse("graph6 A_\ncolor 1: 0\n").is_err());
        let d = Descriptor::parse("graph6 A_\n[x]\ncolor 2: 0\n").unwrap();
        assert!(d.coloring("x").is_err());
        assert!(d.coloring("y").is_err());
        let d = Descriptor::parse("graph6 A_\n[x]\ncolour 1: 0\n").unwrap();
        assert!(d.coloring("x").is_err());
    }
}

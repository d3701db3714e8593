use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::diagram::{fork_insert, Diagram};
use super::insert_eye;
use crate::error::{Error, Result};
use crate::lattice::{catalog, iso, Lattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    /// Slim, semimodular, planar by construction.
    Sps,
    /// Semimodular and planar by construction.
    Ps,
    Other,
}

impl Tag {
    /// The tag a lattice would carry from its asserted planarity and checked
    /// structure.
    pub fn classify(l: &Lattice) -> Tag {
        match (l.planar_asserted() && l.is_semimodular(), l.is_slim()) {
            (true, true) => Tag::Sps,
            (true, false) => Tag::Ps,
            (false, _) => Tag::Other,
        }
    }
}

/// The eye `e` inserted into `cell` of the corpus member named `base`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EyeRecord {
    pub base: String,
    pub cell: [usize; 4],
    pub e: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusEntry {
    pub name: String,
    pub tag: Tag,
    pub lattice: Lattice,
    pub eye: Option<EyeRecord>,
}

/// One line of a corpus manifest: a lattice file relative to the manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub file: String,
    pub tag: Tag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eye: Option<EyeRecord>,
}

impl CorpusEntry {
    pub fn manifest_entry(&self) -> ManifestEntry {
        ManifestEntry {
            name: self.name.clone(),
            file: format!("{}.json", self.name),
            tag: self.tag,
            eye: self.eye.clone(),
        }
    }

    pub fn from_manifest(entry: &ManifestEntry, lattice: Lattice) -> CorpusEntry {
        CorpusEntry {
            name: entry.name.clone(),
            tag: entry.tag,
            lattice,
            eye: entry.eye.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// Grids `C_m × C_n` used as fork bases.
    pub grids: Vec<(usize, usize)>,
    pub chains: Vec<usize>,
    /// Fork insertions applied in sequence to each grid, per variant.
    pub forks: usize,
    /// Eyes inserted in sequence into each SPS member.
    pub eyes: usize,
    /// Independent random fork sequences per grid.
    pub variants: usize,
    pub seed: u64,
    pub max_elements: usize,
    pub max_lattices: usize,
    /// Appends B3, N5, M3×C2, C2×C2×C3 (tagged other) and M4 (tagged ps).
    pub controls: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        let grids = (2..=4).flat_map(|m| (m..=4).map(move |n| (m, n))).collect();
        CorpusSpec {
            grids,
            chains: (2..=5).collect(),
            forks: 2,
            eyes: 3,
            variants: 2,
            seed: 0,
            max_elements: 40,
            max_lattices: 200,
            controls: true,
        }
    }
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if let Some(&(m, n)) = self.grids.iter().find(|&&(m, n)| m == 0 || n == 0) {
            return Err(Error::InvalidSpec(format!("grid {m}x{n} is empty")));
        }
        if self.chains.contains(&0) {
            return Err(Error::InvalidSpec("chain of length 0".into()));
        }
        if self.max_elements == 0 || self.max_lattices == 0 {
            return Err(Error::InvalidSpec("corpus ceilings must be positive".into()));
        }
        Ok(())
    }
}

struct Builder {
    spec: CorpusSpec,
    entries: Vec<CorpusEntry>,
}

impl Builder {
    fn full(&self) -> bool {
        self.entries.len() >= self.spec.max_lattices
    }

    fn push(&mut self, name: String, tag: Tag, lattice: Lattice, eye: Option<EyeRecord>) {
        if !self.full() && lattice.len() <= self.spec.max_elements {
            self.entries.push(CorpusEntry { name, tag, lattice, eye });
        }
    }

    fn seen(&self, l: &Lattice) -> bool {
        self.entries
            .iter()
            .any(|e| e.lattice.len() == l.len() && iso::is_isomorphic(&e.lattice, l))
    }
}

/// Builds the corpus described by `spec`.
///
/// Order: chains, grids, forked grids (deduplicated up to isomorphism), eyed
/// versions of every SPS member, controls. Generation stops silently at
/// `max_lattices`; members above `max_elements` are skipped.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusEntry>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut b = Builder {
        spec: spec.clone(),
        entries: Vec::new(),
    };

    for &k in &spec.chains {
        b.push(format!("chain{k}"), Tag::Sps, Diagram::chain(k).into_lattice(), None);
    }
    for &(m, n) in &spec.grids {
        b.push(format!("grid{m}x{n}"), Tag::Sps, Diagram::grid(m, n).into_lattice(), None);
    }
    for &(m, n) in &spec.grids {
        for v in 0..spec.variants {
            let mut d = Diagram::grid(m, n);
            for k in 1..=spec.forks {
                let mut cells = d.cells();
                cells.shuffle(&mut rng);
                let next = cells
                    .into_iter()
                    .map(|c| fork_insert(&d, c))
                    .find(|r| r.as_ref().map_or(true, |f| f.lattice().len() <= spec.max_elements));
                let Some(next) = next else { break };
                d = next?;
                if !b.seen(d.lattice()) {
                    b.push(format!("grid{m}x{n}-v{v}f{k}"), Tag::Sps, d.lattice().clone(), None);
                }
            }
        }
    }

    let sps: Vec<(String, Lattice)> = b
        .entries
        .iter()
        .map(|e| (e.name.clone(), e.lattice.clone()))
        .collect();
    for (name, base) in sps {
        let mut cur = base;
        let mut cur_name = name.clone();
        for k in 1..=spec.eyes {
            let Some(&cell) = cur.four_cells().choose(&mut rng) else {
                break;
            };
            let (le, e) = insert_eye(&cur, cell)?;
            let eye = EyeRecord {
                base: cur_name,
                cell,
                e,
            };
            cur_name = format!("{name}-e{k}");
            b.push(cur_name.clone(), Tag::Ps, le.clone(), Some(eye));
            cur = le;
        }
    }

    if spec.controls {
        let c2 = catalog::chain(2);
        let controls = [
            ("b3", catalog::boolean(3)),
            ("n5", catalog::n5()),
            ("m3xc2", catalog::product(&catalog::m_n(3), &c2)),
            ("c2xc2xc3", catalog::product(&catalog::boolean(2), &catalog::chain(3))),
        ];
        for (name, l) in controls {
            b.push(name.into(), Tag::Other, l, None);
        }
        b.push("m4".into(), Tag::Ps, catalog::m_n(4).with_planar(true), None);
    }
    Ok(b.entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_spec() -> CorpusSpec {
        CorpusSpec {
            grids: vec![(2, 2)],
            chains: vec![],
            forks: 0,
            eyes: 1,
            variants: 1,
            controls: false,
            ..CorpusSpec::default()
        }
    }

    #[test]
    fn square_and_its_eye() {
        let c = generate_corpus(&small_spec()).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].name, "grid2x2");
        assert_eq!(c[1].tag, Tag::Ps);
        assert!(iso::is_isomorphic(&c[1].lattice, &catalog::m_n(3)));
        let eye = c[1].eye.as_ref().unwrap();
        assert_eq!((eye.base.as_str(), eye.cell, eye.e), ("grid2x2", [0, 1, 2, 3], 4));
        assert!(c.iter().all(|e| e.lattice.planar_asserted()));
    }

    #[test]
    fn default_corpus_shape() {
        let spec = CorpusSpec::default();
        let c = generate_corpus(&spec).unwrap();
        assert!(c.len() <= spec.max_lattices);
        assert!(c.iter().all(|e| e.lattice.len() <= spec.max_elements));
        for e in &c {
            match e.tag {
                Tag::Sps => assert!(e.lattice.is_slim() && e.lattice.is_semimodular()),
                Tag::Ps => {
                    assert!(e.lattice.is_semimodular());
                    assert!(!e.lattice.is_slim());
                }
                Tag::Other => assert!(!e.lattice.planar_asserted()),
            }
            assert_eq!(Tag::classify(&e.lattice), e.tag, "{}", e.name);
        }
        assert!(c.iter().any(|e| e.name.contains('f')));
        assert!(c.iter().any(|e| e.name.ends_with("-e3")));
        assert_eq!(c, generate_corpus(&spec).unwrap());
    }

    #[test]
    fn seeds_change_the_corpus() {
        let a = generate_corpus(&CorpusSpec::default()).unwrap();
        let b = generate_corpus(&CorpusSpec {
            seed: 7,
            ..CorpusSpec::default()
        })
        .unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn manifest_round_trip() {
        let c = generate_corpus(&small_spec()).unwrap();
        let m: Vec<ManifestEntry> = c.iter().map(CorpusEntry::manifest_entry).collect();
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains(r#""file":"grid2x2.json","tag":"sps""#));
        let back: Vec<ManifestEntry> = serde_json::from_str(&json).unwrap();
        let rebuilt: Vec<CorpusEntry> = back
            .iter()
            .zip(&c)
            .map(|(e, orig)| CorpusEntry::from_manifest(e, orig.lattice.clone()))
            .collect();
        assert_eq!(rebuilt, c);
    }

    #[test]
    fn rejects_empty_grids() {
        let spec = CorpusSpec {
            grids: vec![(0, 3)],
            ..CorpusSpec::default()
        };
        assert!(matches!(generate_corpus(&spec), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn ceilings_apply() {
        let spec = CorpusSpec {
            max_lattices: 5,
            ..CorpusSpec::default()
        };
        assert_eq!(generate_corpus(&spec).unwrap().len(), 5);
    }
}

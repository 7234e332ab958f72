//! Dynkin-diagram combinatorics: induced subdiagrams, connected components,
//! component-type classification, end admissibility, diagram automorphisms.

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Series, SimpleType};

/// An induced subdiagram of a simple Dynkin diagram. Vertices keep their
/// ambient (Bourbaki) labels; edges carry the multiplicity and, for multiple
/// edges, the vertex on the short-root side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub ambient: SimpleType,
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    /// For multiplicity ≥ 2, the endpoint carrying the shorter root.
    pub short_end: Option<usize>,
}

/// A connected component of a [`Diagram`], classified as a simple type
/// together with a relabeling onto canonical Bourbaki positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub classified_type: SimpleType,
    /// `labeling[k]` is the ambient vertex sitting at Bourbaki position k+1.
    pub labeling: Vec<usize>,
}

impl Component {
    pub fn vertices(&self) -> &[usize] {
        &self.labeling
    }

    pub fn rank(&self) -> usize {
        self.labeling.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.labeling.contains(&v)
    }

    /// Bourbaki position (1-based) of an ambient vertex within the component.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.labeling.iter().position(|&u| u == v).map(|p| p + 1)
    }
}

/// Induced subgraph of the diagram of `stype` on the complement of `removed`.
pub fn subdiagram(stype: SimpleType, removed: &[usize]) -> Result<Diagram> {
    let rs = RootSystem::new(stype)?;
    for &v in removed {
        if v < 1 || v > stype.rank {
            return Err(Error::InvalidVertex { stype, vertex: v });
        }
    }
    let vertices: Vec<usize> = (1..=stype.rank).filter(|v| !removed.contains(v)).collect();
    let cartan = rs.cartan();
    let mut edges = Vec::new();
    for (idx, &a) in vertices.iter().enumerate() {
        for &b in &vertices[idx + 1..] {
            let cab = cartan[a - 1][b - 1];
            let cba = cartan[b - 1][a - 1];
            if cab == 0 {
                continue;
            }
            let multiplicity = (cab * cba) as u8;
            // The short root's coroot row carries the -multiplicity entry.
            let short_end = if multiplicity > 1 {
                Some(if cab.unsigned_abs() > 1 { a } else { b })
            } else {
                None
            };
            edges.push(Edge {
                a,
                b,
                multiplicity,
                short_end,
            });
        }
    }
    Ok(Diagram {
        ambient: stype,
        vertices,
        edges,
    })
}

/// The full diagram of a simple type.
pub fn full_diagram(stype: SimpleType) -> Result<Diagram> {
    subdiagram(stype, &[])
}

impl Diagram {
    fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for e in &self.edges {
            if e.a == v {
                out.push(e.b);
            } else if e.b == v {
                out.push(e.a);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<&Edge> {
        self.edges
            .iter()
            .find(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a))
    }

    /// Connected components, each classified into a simple type.
    pub fn components(&self) -> Result<Vec<Component>> {
        let mut remaining: Vec<usize> = self.vertices.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.first() {
            let mut stack = vec![start];
            let mut comp = vec![start];
            remaining.retain(|&v| v != start);
            while let Some(v) = stack.pop() {
                for u in self.neighbors(v) {
                    if remaining.contains(&u) {
                        remaining.retain(|&w| w != u);
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(self.classify_component(&comp)?);
        }
        out.sort_by_key(|c| c.labeling.iter().copied().min());
        Ok(out)
    }

    /// Component of the diagram containing `v`, if present.
    pub fn component_of(&self, v: usize) -> Result<Option<Component>> {
        Ok(self.components()?.into_iter().find(|c| c.contains(v)))
    }

    fn classify_component(&self, comp: &[usize]) -> Result<Component> {
        let n = comp.len();
        let fail = |msg: &str| Error::Internal(format!("unclassifiable component {comp:?}: {msg}"));

        if n == 1 {
            return Ok(Component {
                classified_type: SimpleType::new(Series::A, 1)?,
                labeling: comp.to_vec(),
            });
        }

        let degree = |v: usize| {
            self.neighbors(v)
                .iter()
                .filter(|u| comp.contains(u))
                .count()
        };
        let internal_edges: Vec<&Edge> = self
            .edges
            .iter()
            .filter(|e| comp.contains(&e.a) && comp.contains(&e.b))
            .collect();
        if internal_edges.len() != n - 1 {
            return Err(fail("not a tree"));
        }

        let multiple: Vec<&&Edge> = internal_edges
            .iter()
            .filter(|e| e.multiplicity > 1)
            .collect();
        if multiple.len() > 1 {
            return Err(fail("more than one multiple edge"));
        }
        let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
        if comp.iter().any(|&v| degree(v) > 3) || branch.len() > 1 {
            return Err(fail("bad branching"));
        }

        if let Some(edge) = multiple.first() {
            if !branch.is_empty() {
                return Err(fail("multiple edge with branching"));
            }
            let path = self.path_order(comp)?;
            let short = edge.short_end.ok_or_else(|| fail("missing short end"))?;
            let long = if edge.a == short { edge.b } else { edge.a };
            if edge.multiplicity == 3 {
                if n != 2 {
                    return Err(fail("triple edge in rank > 2"));
                }
                // G2 numbering puts the short root first.
                return Ok(Component {
                    classified_type: SimpleType::new(Series::G, 2)?,
                    labeling: vec![short, long],
                });
            }
            if n == 2 {
                // The doubly-laced rank-2 component; canonicalized as B2,
                // long root first.
                return Ok(Component {
                    classified_type: SimpleType::new(Series::B, 2)?,
                    labeling: vec![long, short],
                });
            }
            let ends = [path[0], path[n - 1]];
            if ends.contains(&short) {
                // Double edge at the short terminal: type B.
                let mut labeling = path.clone();
                if labeling[0] == short {
                    labeling.reverse();
                }
                return Ok(Component {
                    classified_type: SimpleType::new(Series::B, n)?,
                    labeling,
                });
            }
            if ends.contains(&long) {
                // Double edge at the long terminal: type C.
                let mut labeling = path.clone();
                if labeling[0] == long {
                    labeling.reverse();
                }
                return Ok(Component {
                    classified_type: SimpleType::new(Series::C, n)?,
                    labeling,
                });
            }
            // Interior double edge: type F4.
            if n != 4 {
                return Err(fail("interior double edge in rank != 4"));
            }
            let mut labeling = path;
            // The long pair occupies positions 1, 2.
            if labeling[1] == short {
                labeling.reverse();
            }
            return Ok(Component {
                classified_type: SimpleType::new(Series::F, 4)?,
                labeling,
            });
        }

        // Simply laced from here.
        if branch.is_empty() {
            let labeling = self.path_order(comp)?;
            return Ok(Component {
                classified_type: SimpleType::new(Series::A, n)?,
                labeling,
            });
        }

        let center = branch[0];
        let mut arms: Vec<Vec<usize>> = Vec::new();
        for start in self.neighbors(center) {
            if !comp.contains(&start) {
                continue;
            }
            let mut arm = vec![start];
            let mut prev = center;
            let mut cur = start;
            loop {
                let next: Vec<usize> = self
                    .neighbors(cur)
                    .into_iter()
                    .filter(|&u| u != prev && comp.contains(&u))
                    .collect();
                match next.as_slice() {
                    [] => break,
                    [u] => {
                        arm.push(*u);
                        prev = cur;
                        cur = *u;
                    }
                    _ => return Err(fail("second branch point")),
                }
            }
            arms.push(arm);
        }
        if arms.len() != 3 {
            return Err(fail("branch without three arms"));
        }
        arms.sort_by_key(|arm| (arm.len(), arm[0]));
        let lens = (arms[0].len(), arms[1].len(), arms[2].len());
        match lens {
            (1, 1, 1) => {
                // D4: all three arms are leaves; keep them sorted around the
                // center.
                let mut leaves = [arms[0][0], arms[1][0], arms[2][0]];
                leaves.sort_unstable();
                Ok(Component {
                    classified_type: SimpleType::new(Series::D, 4)?,
                    labeling: vec![leaves[0], center, leaves[1], leaves[2]],
                })
            }
            (1, 1, k) => {
                // D_{k+3}: tail read inward is α_{n-3}..α_1; the two short
                // arms are the fork α_{n-1}, α_n; the center is α_{n-2}.
                let rank = k + 3;
                let mut labeling = vec![0; rank];
                for (j, &v) in arms[2].iter().enumerate() {
                    labeling[rank - 4 - j] = v;
                }
                labeling[rank - 3] = center;
                labeling[rank - 2] = arms[0][0];
                labeling[rank - 1] = arms[1][0];
                Ok(Component {
                    classified_type: SimpleType::new(Series::D, rank)?,
                    labeling,
                })
            }
            (1, 2, k) if (2..=4).contains(&k) => {
                // E_{k+4}: fork leaf is α_2, two-vertex arm is α_3, α_1,
                // the long arm runs α_5, α_6, ...
                let rank = k + 4;
                let mut labeling = vec![0; rank];
                labeling[1] = arms[0][0];
                labeling[2] = arms[1][0];
                labeling[0] = arms[1][1];
                labeling[3] = center;
                for (j, &v) in arms[2].iter().enumerate() {
                    labeling[4 + j] = v;
                }
                Ok(Component {
                    classified_type: SimpleType::new(Series::E, rank)?,
                    labeling,
                })
            }
            _ => Err(fail("arm lengths outside D/E range")),
        }
    }

    /// Vertices of a path component in path order, smaller endpoint first.
    fn path_order(&self, comp: &[usize]) -> Result<Vec<usize>> {
        let degree = |v: usize| {
            self.neighbors(v)
                .iter()
                .filter(|u| comp.contains(u))
                .count()
        };
        let mut ends: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) <= 1).collect();
        ends.sort_unstable();
        if ends.len() != 2 {
            return Err(Error::Internal(format!("component {comp:?} is not a path")));
        }
        let mut order = vec![ends[0]];
        let mut prev = 0usize;
        let mut cur = ends[0];
        while order.len() < comp.len() {
            let next = self
                .neighbors(cur)
                .into_iter()
                .find(|&u| u != prev && comp.contains(&u))
                .ok_or_else(|| Error::Internal("path walk stuck".into()))?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        Ok(order)
    }
}

/// Whether `v` is an admissible end of its component: an end of a type-A
/// chain, the far end of a type-C chain (not adjacent to the double edge),
/// a single vertex, or the short root of the doubly-laced rank-2 component.
pub fn admissible_end(component: &Component, v: usize) -> bool {
    let Some(pos) = component.position(v) else {
        return false;
    };
    let t = component.classified_type;
    match t.series {
        Series::A => pos == 1 || pos == t.rank,
        // Rank-2 doubly-laced component (canonical B2 labeling [long, short]):
        // exactly the short root qualifies.
        Series::B if t.rank == 2 => pos == 2,
        Series::C if t.rank >= 3 => pos == 1,
        _ => false,
    }
}

/// The automorphism group of the diagram, as vertex permutations
/// (`perm[v-1]` is the image of `v`).
pub fn diagram_automorphisms(stype: SimpleType) -> Vec<Vec<usize>> {
    let m = stype.rank;
    let identity: Vec<usize> = (1..=m).collect();
    let mut out = vec![identity.clone()];
    match stype.series {
        Series::A if m >= 2 => {
            out.push((1..=m).map(|v| m + 1 - v).collect());
        }
        Series::D if m == 4 => {
            // Triality: S3 on the three leaves {1, 3, 4}.
            out.clear();
            for perm3 in [
                [1, 3, 4],
                [1, 4, 3],
                [3, 1, 4],
                [3, 4, 1],
                [4, 1, 3],
                [4, 3, 1],
            ] {
                out.push(vec![perm3[0], 2, perm3[1], perm3[2]]);
            }
        }
        Series::D => {
            let mut swap = identity;
            swap[m - 2] = m;
            swap[m - 1] = m - 1;
            out.push(swap);
        }
        Series::E if m == 6 => {
            out.push(vec![6, 2, 5, 4, 3, 1]);
        }
        _ => {}
    }
    out
}

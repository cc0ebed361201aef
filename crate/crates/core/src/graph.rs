//! Complete graphs with colored edges, stored as a dense upper-triangular table.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::spec::OrbitLayout;

pub type Color = u16;

#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `{u, v}` (`u < v`) in the triangular table.
#[inline]
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Inverse of [`pair_index`].
pub fn pair_at(n: usize, mut idx: usize) -> (usize, usize) {
    let mut u = 0;
    loop {
        let row = n - u - 1;
        if idx < row {
            return (u, u + 1 + idx);
        }
        idx -= row;
        u += 1;
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "GraphRecord", into = "GraphRecord")]
pub struct ColoredGraph {
    n: usize,
    k: usize,
    colors: Vec<Color>,
}

#[derive(Serialize, Deserialize)]
struct GraphRecord {
    n: usize,
    k: usize,
    colors: Vec<Color>,
}

impl TryFrom<GraphRecord> for ColoredGraph {
    type Error = Error;
    fn try_from(r: GraphRecord) -> Result<Self> {
        ColoredGraph::from_colors(r.n, r.k, r.colors)
    }
}

impl From<ColoredGraph> for GraphRecord {
    fn from(g: ColoredGraph) -> Self {
        GraphRecord {
            n: g.n,
            k: g.k,
            colors: g.colors,
        }
    }
}

impl ColoredGraph {
    /// All pairs in color 0.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("a colored graph needs k >= 1".into()));
        }
        Ok(ColoredGraph {
            n,
            k,
            colors: vec![0; pair_count(n)],
        })
    }

    pub fn from_colors(n: usize, k: usize, colors: Vec<Color>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Format("k must be at least 1".into()));
        }
        if colors.len() != pair_count(n) {
            return Err(Error::Format(format!(
                "expected {} pair colors for n={n}, got {}",
                pair_count(n),
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c as usize >= k) {
            return Err(Error::ColorOutOfRange {
                color: c as usize,
                k,
            });
        }
        Ok(ColoredGraph { n, k, colors })
    }

    pub fn monochromatic(n: usize) -> Self {
        ColoredGraph {
            n,
            k: 1,
            colors: vec![0; pair_count(n)],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfPair(u));
        }
        Ok(())
    }

    pub fn edge_color(&self, u: usize, v: usize) -> Result<Color> {
        self.check_pair(u, v)?;
        Ok(self.color(u, v))
    }

    /// Unchecked color lookup for `u != v`.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colors[pair_index(self.n, a, b)]
    }

    pub fn set_color(&mut self, u: usize, v: usize, c: Color) -> Result<()> {
        self.check_pair(u, v)?;
        if c as usize >= self.k {
            return Err(Error::ColorOutOfRange {
                color: c as usize,
                k: self.k,
            });
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colors[pair_index(self.n, a, b)] = c;
        Ok(())
    }

    /// Number of `i`-neighbors of `v`.
    pub fn i_degree(&self, v: usize, i: Color) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if i as usize >= self.k {
            return Err(Error::ColorOutOfRange {
                color: i as usize,
                k: self.k,
            });
        }
        Ok((0..self.n)
            .filter(|&u| u != v && self.color(u, v) == i)
            .count())
    }

    pub fn neighbors(&self, v: usize, i: Color) -> Vec<usize> {
        (0..self.n)
            .filter(|&u| u != v && self.color(u, v) == i)
            .collect()
    }

    /// Every pair of vertices is joined by a path using only colors in `colors`.
    pub fn x_connected(&self, colors: &[Color]) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut allowed = vec![false; self.k.max(1)];
        for &c in colors {
            if (c as usize) < self.k {
                allowed[c as usize] = true;
            }
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in 0..self.n {
                if !seen[u] && u != v && allowed[self.color(u, v) as usize] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    /// Subgraph on `w`, renumbered in increasing vertex order.
    pub fn spanned_subgraph(&self, w: &[usize]) -> Result<ColoredGraph> {
        let mut verts = w.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() < 2 {
            return Err(Error::InvalidArgument(
                "a spanned subgraph needs at least two vertices".into(),
            ));
        }
        if let Some(&v) = verts.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let m = verts.len();
        let mut colors = Vec::with_capacity(pair_count(m));
        for a in 0..m {
            for b in a + 1..m {
                colors.push(self.color(verts[a], verts[b]));
            }
        }
        Ok(ColoredGraph {
            n: m,
            k: self.k,
            colors,
        })
    }

    /// `pi·G`: the graph in which `{pi(u), pi(v)}` has the color of `{u, v}`.
    pub fn relabel(&self, pi: &Permutation) -> Result<ColoredGraph> {
        if pi.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: pi.degree(),
            });
        }
        let mut out = self.clone();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let (a, b) = (pi.apply(u), pi.apply(v));
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                out.colors[pair_index(self.n, a, b)] = self.color(u, v);
            }
        }
        Ok(out)
    }

    /// Number of distinct colors actually present.
    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.k];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    pub fn nonzero_edges(&self) -> usize {
        self.colors.iter().filter(|&&c| c != 0).count()
    }

    /// Swap two color classes.
    pub fn swap_colors(&self, a: Color, b: Color) -> ColoredGraph {
        let mut out = self.clone();
        for c in &mut out.colors {
            if *c == a {
                *c = b;
            } else if *c == b {
                *c = a;
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<ColoredGraph> {
        serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))
    }

    /// Graphviz rendering; color-0 pairs are omitted.
    pub fn to_dot(&self, layout: Option<&OrbitLayout>) -> String {
        const PALETTE: [(&str, &str); 8] = [
            ("gray", "invis"),
            ("black", "solid"),
            ("red", "dashed"),
            ("blue", "dotted"),
            ("darkgreen", "bold"),
            ("orange", "solid"),
            ("purple", "dashed"),
            ("brown", "dotted"),
        ];
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            let label = match layout {
                Some(l) if l.degree() == self.n => l.label(v),
                _ => v.to_string(),
            };
            let _ = writeln!(s, "  {v} [label=\"{label}\"];");
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                let c = self.color(u, v);
                if c == 0 {
                    continue;
                }
                let (color, style) = PALETTE[c as usize % PALETTE.len()];
                let _ = writeln!(s, "  {u} -- {v} [color={color}, style={style}];");
            }
        }
        s.push_str("}\n");
        s
    }
}

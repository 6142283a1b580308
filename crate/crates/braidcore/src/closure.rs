use serde::{Deserialize, Serialize};

use crate::error::BraidError;
use crate::word::ColoredBraidWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    /// Bottom positions visited by the component, starting at the smallest.
    pub strands: Vec<usize>,
    pub color: usize,
}

/// Components of a braid closure and their pairwise linking numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureData {
    mu: usize,
    components: Vec<Component>,
    /// Symmetric, zero diagonal.
    linking: Vec<Vec<i64>>,
}

impl ClosureData {
    pub fn of(b: &ColoredBraidWord) -> Result<Self, BraidError> {
        let perm = b.induced_permutation();
        let colors = b.bottom().colors();
        let mut component_of = vec![0; b.strands()];
        let mut components = Vec::new();
        for cycle in perm.cycles() {
            let color = colors[cycle[0]];
            if let Some(&p) = cycle.iter().find(|&&p| colors[p] != color) {
                return Err(BraidError::InconsistentColoring(color, colors[p]));
            }
            for &p in &cycle {
                component_of[p] = components.len();
            }
            components.push(Component { strands: cycle, color });
        }

        let nu = components.len();
        let mut twice = vec![vec![0i64; nu]; nu];
        let mut at: Vec<usize> = (0..b.strands()).collect();
        for &l in b.letters() {
            let a = l.unsigned_abs() as usize - 1;
            let (x, y) = (component_of[at[a]], component_of[at[a + 1]]);
            if x != y {
                let s = i64::from(l.signum());
                twice[x][y] += s;
                twice[y][x] += s;
            }
            at.swap(a, a + 1);
        }
        let linking = twice
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| {
                        debug_assert!(v % 2 == 0);
                        v / 2
                    })
                    .collect()
            })
            .collect();
        Ok(Self { mu: b.mu(), components, linking })
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn linking_matrix(&self) -> &[Vec<i64>] {
        &self.linking
    }

    pub fn linking(&self, i: usize, j: usize) -> i64 {
        self.linking[i][j]
    }

    /// Indices of the components forming the sublink of color `color`.
    pub fn sublink(&self, color: usize) -> Vec<usize> {
        (0..self.components.len()).filter(|&k| self.components[k].color == color).collect()
    }

    /// Linking number of component `k` with the sublink of color `color`,
    /// leaving out `k` itself.
    pub fn linking_with_color(&self, k: usize, color: usize) -> i64 {
        self.sublink(color).into_iter().filter(|&j| j != k).map(|j| self.linking[k][j]).sum()
    }

    /// Linking number of the sublinks of colors `i` and `j`, `i ≠ j`.
    pub fn sublink_linking(&self, i: usize, j: usize) -> i64 {
        assert_ne!(i, j);
        let other = self.sublink(j);
        self.sublink(i).into_iter().flat_map(|a| other.iter().map(move |&b| (a, b))).map(|(a, b)| self.linking[a][b]).sum()
    }

    /// Sum of `sublink_linking(i, j)` over color pairs `i < j`.
    pub fn total_sublink_linking(&self) -> i64 {
        let mut s = 0;
        for i in 1..=self.mu {
            for j in i + 1..=self.mu {
                s += self.sublink_linking(i, j);
            }
        }
        s
    }
}

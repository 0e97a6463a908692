use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::RootError;
use crate::linalg::Matrix;
use crate::{Int, IntMatrix};

/// Default cap on enumerated group elements or orbit points.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 10_000_000;

/// A finite matrix group given by generators acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionGroup {
    dim: usize,
    generators: Vec<IntMatrix>,
}

impl ReflectionGroup {
    pub fn new(dim: usize, generators: Vec<IntMatrix>) -> Self {
        assert!(generators.iter().all(|g| g.rows() == dim && g.cols() == dim));
        ReflectionGroup { dim, generators }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    /// All elements, identity first, in breadth-first order by word length.
    pub fn elements(&self, limit: usize) -> Result<Vec<IntMatrix>, RootError> {
        let id = Matrix::identity(self.dim);
        let mut seen: HashSet<IntMatrix> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &self.generators {
                let h = s.mul(&g);
                if seen.insert(h.clone()) {
                    if seen.len() > limit {
                        return Err(RootError::EnumerationLimit { limit });
                    }
                    out.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        Ok(out)
    }

    pub fn order(&self, limit: usize) -> Result<usize, RootError> {
        Ok(self.elements(limit)?.len())
    }

    /// Orbit of a vector, in breadth-first order from `v`.
    pub fn orbit(&self, v: &[Int], limit: usize) -> Result<Vec<Vec<Int>>, RootError> {
        let mut seen: HashSet<Vec<Int>> = HashSet::from([v.to_vec()]);
        let mut out = vec![v.to_vec()];
        let mut queue = VecDeque::from([v.to_vec()]);
        while let Some(x) = queue.pop_front() {
            for s in &self.generators {
                let y = s.mul_vec(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return Err(RootError::EnumerationLimit { limit });
                    }
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(out)
    }

    /// Orbit of a finite set of vectors under the induced action on sets.
    pub fn set_orbit(
        &self,
        set: &BTreeSet<Vec<Int>>,
        limit: usize,
    ) -> Result<Vec<BTreeSet<Vec<Int>>>, RootError> {
        let mut seen = HashSet::from([set.clone()]);
        let mut out = vec![set.clone()];
        let mut queue = VecDeque::from([set.clone()]);
        while let Some(x) = queue.pop_front() {
            for s in &self.generators {
                let y: BTreeSet<Vec<Int>> = x.iter().map(|v| s.mul_vec(v)).collect();
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return Err(RootError::EnumerationLimit { limit });
                    }
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(out)
    }

    /// Elements fixing a set of vectors setwise.
    pub fn set_stabilizer(
        &self,
        set: &BTreeSet<Vec<Int>>,
        limit: usize,
    ) -> Result<Vec<IntMatrix>, RootError> {
        Ok(self
            .elements(limit)?
            .into_iter()
            .filter(|g| set.iter().map(|v| g.mul_vec(v)).collect::<BTreeSet<_>>() == *set)
            .collect())
    }

    /// Word (generator indices, applied right to left) for every element.
    pub fn words(&self, limit: usize) -> Result<HashMap<IntMatrix, Vec<usize>>, RootError> {
        let id = Matrix::identity(self.dim);
        let mut words = HashMap::from([(id.clone(), vec![])]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            let w = words[&g].clone();
            for (k, s) in self.generators.iter().enumerate() {
                let h = s.mul(&g);
                if !words.contains_key(&h) {
                    if words.len() >= limit {
                        return Err(RootError::EnumerationLimit { limit });
                    }
                    let mut hw = vec![k];
                    hw.extend(&w);
                    words.insert(h.clone(), hw);
                    queue.push_back(h);
                }
            }
        }
        Ok(words)
    }
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite distributive lattice given by join and meet tables over
/// indexed elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LatticeJson", into = "LatticeJson")]
pub struct Lattice {
    elements: Vec<String>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeJson {
    elements: Vec<String>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
}

impl TryFrom<LatticeJson> for Lattice {
    type Error = Error;

    fn try_from(j: LatticeJson) -> Result<Self> {
        Lattice::new(j.elements, j.join, j.meet)
    }
}

impl From<Lattice> for LatticeJson {
    fn from(l: Lattice) -> Self {
        LatticeJson { elements: l.elements, join: l.join, meet: l.meet }
    }
}

impl Lattice {
    /// Validates the tables exhaustively: closure, commutativity,
    /// associativity, absorption and distributivity.
    pub fn new(elements: Vec<String>, join: Vec<Vec<usize>>, meet: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::spec("lattice has no elements"));
        }
        let mut names = elements.clone();
        names.sort();
        names.dedup();
        if names.len() != n {
            return Err(Error::spec("lattice element names must be distinct"));
        }
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&x| x < n));
        if !square(&join) || !square(&meet) {
            return Err(Error::spec(format!("join and meet must be {n}x{n} tables over element indices")));
        }
        let all = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
        for (a, b) in all() {
            if join[a][b] != join[b][a] || meet[a][b] != meet[b][a] {
                return Err(Error::spec("join/meet not commutative"));
            }
            if join[a][meet[a][b]] != a || meet[a][join[a][b]] != a {
                return Err(Error::spec("join/meet not absorptive"));
            }
            for c in 0..n {
                if join[join[a][b]][c] != join[a][join[b][c]] || meet[meet[a][b]][c] != meet[a][meet[b][c]] {
                    return Err(Error::spec("join/meet not associative"));
                }
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                    return Err(Error::spec("lattice is not distributive"));
                }
            }
        }
        let bottom = (0..n).fold(0, |acc, x| meet[acc][x]);
        let top = (0..n).fold(0, |acc, x| join[acc][x]);
        Ok(Lattice { elements, join, meet, bottom, top })
    }

    /// The chain `0 < 1 < … < k`, elements named by their rank.
    pub fn chain(k: usize) -> Self {
        let elements = (0..=k).map(|i| i.to_string()).collect();
        let join = (0..=k).map(|a| (0..=k).map(|b| a.max(b)).collect()).collect();
        let meet = (0..=k).map(|a| (0..=k).map(|b| a.min(b)).collect()).collect();
        Lattice::new(elements, join, meet).expect("chains are distributive lattices")
    }

    /// The four-element Boolean lattice `{bot, x, y, top}`.
    pub fn diamond() -> Self {
        let elements = ["bot", "x", "y", "top"].map(String::from).to_vec();
        // Subsets of {x, y} as bitmasks: bot=0, x=1, y=2, top=3.
        let join = (0..4).map(|a| (0..4).map(|b| a | b).collect()).collect();
        let meet = (0..4).map(|a| (0..4).map(|b| a & b).collect()).collect();
        Lattice::new(elements, join, meet).expect("Boolean lattices are distributive")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.join[a][b] == b
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_and_diamond() {
        let c = Lattice::chain(2);
        assert_eq!((c.bottom(), c.top()), (0, 2));
        assert!(c.leq(1, 2));
        let d = Lattice::diamond();
        assert_eq!(d.join(1, 2), 3);
        assert_eq!(d.meet(1, 2), 0);
        assert!(!d.leq(1, 2) && !d.leq(2, 1));
    }

    #[test]
    fn rejects_non_distributive_pentagon() {
        // N5: 0 < a < b < 1, 0 < c < 1, c incomparable to a and b.
        let le = |x: usize, y: usize| {
            x == y || x == 0 || y == 4 || (x == 1 && y == 2)
        };
        let n = 5;
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                join[a][b] = (0..n).filter(|&u| le(a, u) && le(b, u)).find(|&u| (0..n).filter(|&w| le(a, w) && le(b, w)).all(|w| le(u, w))).unwrap();
                meet[a][b] = (0..n).filter(|&u| le(u, a) && le(u, b)).find(|&u| (0..n).filter(|&w| le(w, a) && le(w, b)).all(|w| le(w, u))).unwrap();
            }
        }
        let names = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        assert!(matches!(Lattice::new(names, join, meet), Err(Error::Spec(_))));
    }

    #[test]
    fn rejects_bad_tables() {
        let names = vec!["0".to_string(), "1".to_string()];
        let join = vec![vec![0, 1], vec![0, 1]];
        let meet = vec![vec![0, 0], vec![0, 1]];
        assert!(Lattice::new(names, join, meet).is_err());
    }
}

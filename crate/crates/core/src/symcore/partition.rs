use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::symcore::SymError;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Trailing zeros are dropped; fails on increasing entries.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, SymError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(SymError::NotPartition(format!("{:?}", parts)));
        }
        Ok(Partition(parts))
    }

    pub fn from_slice(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("not a partition")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }
    /// i-th part, 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let w = self.part(0);
        Partition(
            (1..=w)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Whether the Young diagram fits in the a-row, b-column box.
    pub fn fits(&self, a: usize, b: u32) -> bool {
        self.len() <= a && self.part(0) <= b
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }

    /// Complement in the a x b box: row j of the result is b minus row a+1-j.
    pub fn complement(&self, a: usize, b: u32) -> Option<Partition> {
        if !self.fits(a, b) {
            return None;
        }
        let parts = (0..a).map(|j| b - self.part(a - 1 - j)).collect();
        Some(Partition::new(parts).unwrap())
    }

    /// Transpose of the complement in the a x b box.
    pub fn complement_transpose(&self, a: usize, b: u32) -> Option<Partition> {
        self.complement(a, b).map(|c| c.transpose())
    }

    /// The full a x b box.
    pub fn rect(a: usize, b: u32) -> Partition {
        if b == 0 {
            return Partition::empty();
        }
        Partition(vec![b; a])
    }

    /// All partitions fitting the a x b box, ordered by size then lexicographically.
    pub fn in_box(a: usize, b: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(a: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).unwrap());
            if cur.len() == a {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(a, p, cur, out);
                cur.pop();
            }
        }
        rec(a, b, &mut cur, &mut out);
        out.sort_by(|x, y| x.size().cmp(&y.size()).then_with(|| x.cmp(y)));
        out
    }

    /// All partitions of n with at most `rows` parts.
    pub fn of_size(n: u32, rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(n: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == rows {
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, rows, cur, out);
                cur.pop();
            }
        }
        rec(n, n, rows, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| SymError::Parse(format!("partition {:?}", s)))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| SymError::Parse(format!("partition {:?}", s)))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p: Partition = "[3,1,1]".parse().unwrap();
        assert_eq!(p.to_string(), "[3,1,1]");
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
    }

    #[test]
    fn transpose_and_complement() {
        let p = Partition::from_slice(&[3, 1]);
        assert_eq!(p.transpose(), Partition::from_slice(&[2, 1, 1]));
        assert_eq!(p.complement(2, 3), Some(Partition::from_slice(&[2])));
        assert_eq!(Partition::empty().complement(2, 2), Some(Partition::rect(2, 2)));
        assert_eq!(p.complement(2, 2), None);
    }

    #[test]
    fn box_counts() {
        // binomial(a+b, a)
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert_eq!(Partition::in_box(3, 3).len(), 20);
        assert_eq!(Partition::of_size(5, 10).len(), 7);
        assert_eq!(Partition::of_size(5, 2).len(), 3);
    }
}

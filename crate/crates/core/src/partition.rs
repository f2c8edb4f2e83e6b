use serde::{Deserialize, Serialize};

use crate::CoreError;

/// Integer partition, stored without trailing zeros. Serializes as a JSON array of parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self, CoreError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CoreError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// Builds a partition and checks it fits in `cap` rows.
    pub fn with_cap(parts: Vec<u64>, cap: usize) -> Result<Self, CoreError> {
        let p = Self::new(parts)?;
        p.check_cap(cap)?;
        Ok(p)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes `|λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn check_cap(&self, cap: usize) -> Result<(), CoreError> {
        if self.parts.len() > cap {
            Err(CoreError::TooManyParts { parts: self.parts.len(), cap })
        } else {
            Ok(())
        }
    }

    /// The first `n` parts padded with zeros.
    pub fn padded(&self, n: usize) -> Vec<u64> {
        (1..=n).map(|i| self.part(i)).collect()
    }

    /// `λ + (1^n)`: adds a full column of height `n`.
    pub fn add_column(&self, n: usize) -> Result<Self, CoreError> {
        self.check_cap(n)?;
        Self::new(self.padded(n).into_iter().map(|p| p + 1).collect())
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(1);
        let parts = (1..=first).map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u64).collect();
        Self { parts }
    }

    /// Whether `self / other` is a horizontal strip (`other ⊆ self`, at most one box per column).
    pub fn horizontal_strip_over(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        (1..=n).all(|i| {
            let (a, b) = (self.part(i), other.part(i));
            b <= a && (i == 1 || a <= other.part(i - 1))
        })
    }

    /// Whether `self / other` is a vertical strip (at most one box per row).
    pub fn vertical_strip_over(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        (1..=n).all(|i| {
            let (a, b) = (self.part(i), other.part(i));
            b <= a && a <= b + 1
        })
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = CoreError;

    fn try_from(v: Vec<u64>) -> Result<Self, CoreError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Vec<u64> {
        p.parts
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Strictly decreasing nonnegative positions `ℓ_1 > … > ℓ_N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct ParticleConfig {
    points: Vec<u64>,
}

impl ParticleConfig {
    pub fn new(points: Vec<u64>) -> Result<Self, CoreError> {
        if points.windows(2).any(|w| w[0] <= w[1]) {
            return Err(CoreError::NotDecreasing(points));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[u64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn to_partition(&self) -> Partition {
        let n = self.points.len();
        let parts = self.points.iter().enumerate().map(|(j, &l)| l - (n - 1 - j) as u64).collect();
        Partition::new(parts).expect("strictly decreasing points give a partition")
    }
}

impl TryFrom<Vec<u64>> for ParticleConfig {
    type Error = CoreError;

    fn try_from(v: Vec<u64>) -> Result<Self, CoreError> {
        ParticleConfig::new(v)
    }
}

impl From<ParticleConfig> for Vec<u64> {
    fn from(p: ParticleConfig) -> Vec<u64> {
        p.points
    }
}

/// `ℓ_j = λ_j + N − j`.
pub fn partition_to_particles(lambda: &Partition, n: usize) -> Result<ParticleConfig, CoreError> {
    lambda.check_cap(n)?;
    let points = (1..=n).map(|j| lambda.part(j) + (n - j) as u64).collect();
    Ok(ParticleConfig { points })
}

/// Inverse of [`partition_to_particles`] on raw positions.
pub fn particles_to_partition(points: &[u64]) -> Result<Partition, CoreError> {
    Ok(ParticleConfig::new(points.to_vec())?.to_partition())
}

/// All partitions with at most `n` parts, each at most `max_part`. There are `C(n + max_part, n)`.
pub fn enumerate_partitions(n: usize, max_part: u64) -> Partitions {
    Partitions { max_part, cur: Some(vec![0; n]) }
}

pub struct Partitions {
    max_part: u64,
    cur: Option<Vec<u64>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.cur.as_mut()?;
        let out = Partition::new(cur.clone()).expect("odometer keeps parts decreasing");
        let mut advanced = false;
        for i in (0..cur.len()).rev() {
            let bound = if i == 0 { self.max_part } else { cur[i - 1] };
            if cur[i] < bound {
                cur[i] += 1;
                cur[i + 1..].iter_mut().for_each(|c| *c = 0);
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.cur = None;
        }
        Some(out)
    }
}

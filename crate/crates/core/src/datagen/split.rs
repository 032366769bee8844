//! Train/dev/test splits whose expression surfaces are pairwise disjoint.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::manifest::ManifestRecord;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitSpec {
    pub ratios: [f64; 3],
    pub seed: u64,
}

impl SplitSpec {
    pub fn new(train: f64, dev: f64, test: f64, seed: u64) -> Result<Self> {
        let ratios = [train, dev, test];
        if ratios.iter().any(|r| r.is_nan() || *r <= 0.0) || ((train + dev + test) - 1.0).abs() > 1e-9 {
            return Err(Error::Config(format!("split ratios {train}/{dev}/{test} must be positive and sum to 1")));
        }
        Ok(SplitSpec { ratios, seed })
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Splits {
    pub train: Vec<ManifestRecord>,
    pub dev: Vec<ManifestRecord>,
    pub test: Vec<ManifestRecord>,
}

impl Splits {
    pub fn parts(&self) -> [(&'static str, &[ManifestRecord]); 3] {
        [("train", &self.train), ("dev", &self.dev), ("test", &self.test)]
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Groups of record indices that share a surface, transitively. Groups are
/// ordered by their first record.
fn surface_groups(records: &[ManifestRecord]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind((0..records.len()).collect());
    let mut owner: HashMap<&str, usize> = HashMap::new();
    for (i, r) in records.iter().enumerate() {
        for e in &r.expressions {
            match owner.get(e.surface.as_str()) {
                Some(&j) => uf.union(i, j),
                None => {
                    owner.insert(&e.surface, i);
                }
            }
        }
    }
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..records.len() {
        let root = uf.find(i);
        let g = *index.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(i);
    }
    groups
}

/// Largest-remainder apportionment of `n` groups, at least one per split.
fn group_counts(n: usize, ratios: [f64; 3]) -> [usize; 3] {
    let quotas = ratios.map(|r| r * n as f64);
    let mut counts = quotas.map(|q| q.floor() as usize);
    let mut order = [0, 1, 2];
    order.sort_by(|&a, &b| (quotas[b] - quotas[b].floor()).total_cmp(&(quotas[a] - quotas[a].floor())).then(a.cmp(&b)));
    let mut left = n - counts.iter().sum::<usize>();
    for &i in order.iter().cycle() {
        if left == 0 {
            break;
        }
        counts[i] += 1;
        left -= 1;
    }
    for i in 0..3 {
        if counts[i] == 0 {
            let donor = (0..3).max_by_key(|&j| (counts[j], std::cmp::Reverse(j))).expect("three splits");
            counts[donor] -= 1;
            counts[i] += 1;
        }
    }
    counts
}

/// Assigns whole surface groups to train/dev/test by a seeded shuffle.
/// Records keep their input order inside each split.
pub fn split_disjoint(records: &[ManifestRecord], spec: &SplitSpec) -> Result<Splits> {
    let mut groups = surface_groups(records);
    if groups.len() < 3 {
        return Err(Error::contract(format!("{} surface groups, need at least 3", groups.len())));
    }
    groups.shuffle(&mut ChaCha8Rng::seed_from_u64(spec.seed));
    let counts = group_counts(groups.len(), spec.ratios);
    let mut assignment = vec![0u8; records.len()];
    let mut it = groups.iter();
    for (split, &count) in counts.iter().enumerate() {
        for group in it.by_ref().take(count) {
            for &i in group {
                assignment[i] = split as u8;
            }
        }
    }
    let mut out = Splits::default();
    for (r, &s) in records.iter().zip(&assignment) {
        match s {
            0 => out.train.push(r.clone()),
            1 => out.dev.push(r.clone()),
            _ => out.test.push(r.clone()),
        }
    }
    Ok(out)
}

/// Utterances and hours per split, in the layout of a dataset summary table.
pub fn render_statistics(splits: &Splits) -> String {
    let mut out = String::from("Set          Utterances  Hours\n");
    for (name, records) in splits.parts() {
        let seconds: f64 = records.iter().filter_map(|r| r.duration).sum();
        writeln!(out, "{name:<12} {:>10}  {:>5.2}", records.len(), seconds / 3600.0).unwrap();
    }
    out
}

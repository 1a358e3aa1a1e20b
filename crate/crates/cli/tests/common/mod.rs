#![allow(dead_code)]

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::Command;

use bckcode_core::{validate_admissible, BlockCode};
use rand::seq::SliceRandom;
use rand::Rng;

pub const MATRIX_3_1: [[usize; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0, 0, 0, 0],
    [3, 1, 1, 0, 0, 0, 0, 0, 0],
    [4, 1, 1, 1, 0, 0, 0, 0, 0],
    [5, 1, 1, 1, 1, 0, 0, 0, 0],
    [6, 3, 2, 1, 1, 1, 0, 0, 0],
    [7, 4, 2, 2, 1, 1, 1, 0, 0],
    [8, 4, 3, 2, 1, 1, 1, 1, 0],
];

pub const MATRIX_3_2: [[usize; 9]; 9] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0, 0, 0, 0],
    [3, 1, 1, 0, 0, 0, 0, 0, 0],
    [4, 1, 1, 1, 0, 0, 0, 0, 0],
    [5, 1, 1, 1, 1, 0, 0, 0, 0],
    [6, 2, 1, 1, 1, 1, 0, 0, 0],
    [7, 3, 2, 1, 1, 1, 1, 0, 0],
    [8, 3, 3, 1, 1, 1, 1, 1, 0],
];

pub const MATRIX_3_3: [[usize; 11]; 11] = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [3, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [4, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [5, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [6, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [7, 2, 1, 1, 1, 1, 1, 0, 0, 0, 0],
    [8, 3, 1, 1, 1, 1, 1, 1, 0, 0, 0],
    [9, 3, 2, 1, 1, 1, 1, 1, 1, 0, 0],
    [10, 3, 3, 1, 1, 1, 1, 1, 1, 1, 0],
];

pub fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

/// Runs the built binary; returns (exit code, stdout, stderr).
pub fn bckcode<I, S>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    let out = Command::new(env!("CARGO_BIN_EXE_bckcode"))
        .args(args)
        .output()
        .expect("spawn bckcode");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

/// Admissible codes drawn as random componentwise chains of single-word
/// admissible candidates.
#[derive(Default)]
pub struct CodeSampler {
    pools: HashMap<(usize, usize), Vec<Vec<usize>>>,
}

impl CodeSampler {
    fn pool(&mut self, n: usize, q: usize) -> &Vec<Vec<usize>> {
        self.pools
            .entry((n, q))
            .or_insert_with(|| candidate_words(n, q))
    }

    pub fn sample<R: Rng>(
        &mut self,
        rng: &mut R,
        n_range: std::ops::RangeInclusive<usize>,
        q_range: std::ops::RangeInclusive<usize>,
        m_range: std::ops::RangeInclusive<usize>,
    ) -> BlockCode {
        loop {
            let n = rng.gen_range(n_range.clone());
            let q = rng.gen_range(q_range.clone());
            let m = rng.gen_range(m_range.clone());
            let pool = self.pool(n, q).clone();
            if pool.is_empty() {
                continue;
            }
            for _ in 0..20 {
                let mut chain = vec![pool.choose(rng).unwrap().clone()];
                while chain.len() < m {
                    let last = chain.last().unwrap();
                    let next: Vec<&Vec<usize>> = pool
                        .iter()
                        .filter(|w| *w != last && w.iter().zip(last).all(|(a, b)| a >= b))
                        .collect();
                    match next.choose(rng) {
                        Some(w) => chain.push((*w).clone()),
                        None => break,
                    }
                }
                if chain.len() < m {
                    continue;
                }
                let code = BlockCode::from_symbols(n, &chain).unwrap();
                if validate_admissible(&code).admissible() {
                    return code;
                }
            }
        }
    }
}

/// Non-increasing words of length `q` over `1..n` admissible on their own.
pub fn candidate_words(n: usize, q: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut w = vec![1; q];
    loop {
        if w.windows(2).all(|p| p[0] >= p[1]) {
            let single = BlockCode::from_symbols(n, &[w.clone()]).unwrap();
            if validate_admissible(&single).admissible() {
                out.push(w.clone());
            }
        }
        let mut i = q;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if w[i] + 1 < n {
                w[i] += 1;
                break;
            }
            w[i] = 1;
        }
    }
}

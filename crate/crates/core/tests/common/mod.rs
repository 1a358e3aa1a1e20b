#![allow(dead_code)]

use bckcode_core::{validate_admissible, BlockCode, CayleyTable};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn example_1_3() -> CayleyTable {
    CayleyTable::from_rows(&[[0, 0, 0, 0], [1, 0, 0, 1], [2, 1, 0, 2], [3, 3, 3, 0]]).unwrap()
}

pub fn code_3_1() -> BlockCode {
    BlockCode::from_symbols(7, &[[3, 2, 1, 1], [4, 2, 2, 1], [4, 3, 2, 1]]).unwrap()
}

pub fn code_3_2() -> BlockCode {
    BlockCode::from_symbols(4, &[[2, 1, 1, 1, 1], [3, 2, 1, 1, 1], [3, 3, 1, 1, 1]]).unwrap()
}

pub fn code_3_3() -> BlockCode {
    BlockCode::from_symbols(
        4,
        &[[1, 1, 1, 1, 1], [2, 1, 1, 1, 1], [3, 1, 1, 1, 1], [3, 2, 1, 1, 1], [3, 3, 1, 1, 1]],
    )
    .unwrap()
}

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

/// Parses digit strings such as `"3211"`.
pub fn digits(s: &str) -> Vec<usize> {
    s.bytes().map(|b| (b - b'0') as usize).collect()
}

/// All non-increasing words of length `q` over `1..n` that pass every
/// per-word rule of a single-word code.
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
        // odometer over 1..n-1
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

/// A random admissible code with `n`, `q`, `m` drawn from the given ranges.
pub fn random_admissible_code<R: Rng>(
    rng: &mut R,
    n_range: std::ops::RangeInclusive<usize>,
    q_range: std::ops::RangeInclusive<usize>,
    m_range: std::ops::RangeInclusive<usize>,
) -> BlockCode {
    loop {
        let n = rng.gen_range(n_range.clone());
        let q = rng.gen_range(q_range.clone());
        let m = rng.gen_range(m_range.clone());
        let pool = candidate_words(n, q);
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

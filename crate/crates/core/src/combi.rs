//! Counting and subset enumeration helpers shared by the enumerating routines.

use alloc::vec::Vec;

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step because acc * (n - i) is divisible by (i + 1)
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Gaussian binomial `[k choose i]_q`, saturating.
pub fn gaussian_binomial(k: u64, i: u64, q: u64) -> u128 {
    if i > k {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for j in 0..i {
        let a = (q as u128).checked_pow((k - j) as u32).map(|x| x - 1);
        let b = (q as u128).checked_pow((j + 1) as u32).map(|x| x - 1);
        match (a.and_then(|a| num.checked_mul(a)), b.and_then(|b| den.checked_mul(b))) {
            (Some(x), Some(y)) => {
                let g = gcd(x, y);
                num = x / g;
                den = y / g;
            }
            _ => return u128::MAX,
        }
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`. Returns whether the enumeration ran to completion.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The subset at a given lexicographic rank. Used to split an enumeration
/// into contiguous shards.
pub fn unrank_subset(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut start = 0usize;
    for slot in 0..k {
        let mut x = start;
        loop {
            let below = binomial((n - x - 1) as u64, (k - slot - 1) as u64);
            if rank < below {
                break;
            }
            rank -= below;
            x += 1;
        }
        out.push(x);
        start = x + 1;
    }
    out
}

/// Like [`for_each_subset`] but restricted to lexicographic ranks
/// `[from, to)`.
pub fn for_each_subset_in(n: usize, k: usize, from: u128, to: u128, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if from >= to || k > n {
        return true;
    }
    let mut idx = unrank_subset(n, k, from);
    let mut pos = from;
    loop {
        if !f(&idx) {
            return false;
        }
        pos += 1;
        if pos >= to {
            return true;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return true;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

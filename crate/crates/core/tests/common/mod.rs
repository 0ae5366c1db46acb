//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's algorithms; words are plain strings over `xyzXYZ` or
//! generator/sign vectors.

#![allow(dead_code)]

use std::collections::VecDeque;

/// Vertex index of a letter's star-graph vertex: x,y,z,X,Y,Z → 0..6.
fn vertex(c: u8) -> usize {
    match c {
        b'x' => 0,
        b'y' => 1,
        b'z' => 2,
        b'X' => 3,
        b'Y' => 4,
        b'Z' => 5,
        _ => panic!("bad letter {c}"),
    }
}

fn inverse(c: u8) -> u8 {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

/// Simple star-graph of a cyclic word as a 6×6 adjacency matrix: each cyclic
/// adjacency `ab` joins `a` and `b⁻¹`. Loops are dropped.
pub fn star_adjacency(word: &[u8]) -> [[bool; 6]; 6] {
    let mut adj = [[false; 6]; 6];
    for i in 0..word.len() {
        let prev = word[(i + word.len() - 1) % word.len()];
        let (a, b) = (vertex(prev), vertex(inverse(word[i])));
        if a != b {
            adj[a][b] = true;
            adj[b][a] = true;
        }
    }
    adj
}

fn distances(adj: &[[bool; 6]; 6]) -> [[usize; 6]; 6] {
    let inf = usize::MAX / 4;
    let mut d = [[inf; 6]; 6];
    for i in 0..6 {
        d[i][i] = 0;
        for j in 0..6 {
            if adj[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..6 {
        for i in 0..6 {
            for j in 0..6 {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

/// Diameter, `None` when disconnected.
pub fn diameter(adj: &[[bool; 6]; 6]) -> Option<usize> {
    let d = distances(adj);
    let m = d.iter().flatten().copied().max().unwrap();
    (m < usize::MAX / 4).then_some(m)
}

/// Girth by removing each edge in turn and measuring the detour.
pub fn girth(adj: &[[bool; 6]; 6]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for a in 0..6 {
        for b in a + 1..6 {
            if !adj[a][b] {
                continue;
            }
            let mut g = *adj;
            g[a][b] = false;
            g[b][a] = false;
            let mut dist = [usize::MAX; 6];
            dist[a] = 0;
            let mut q = VecDeque::from([a]);
            while let Some(u) = q.pop_front() {
                for v in 0..6 {
                    if g[u][v] && dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        q.push_back(v);
                    }
                }
            }
            if dist[b] != usize::MAX {
                let c = dist[b] + 1;
                best = Some(best.map_or(c, |x: usize| x.min(c)));
            }
        }
    }
    best
}

/// `K_{3,3}`: some 3-set of vertices is joined to each vertex outside it
/// and to nothing inside.
pub fn is_k33(adj: &[[bool; 6]; 6]) -> bool {
    (0u32..64).filter(|s| s.count_ones() == 3).any(|s| {
        let side = |v: usize| s >> v & 1 == 1;
        (0..6).all(|i| (0..6).all(|j| adj[i][j] == (side(i) != side(j))))
    })
}

/// The plain enumeration loop over all 6⁹ words, with the
/// girth-4/diameter-2 test.
pub fn naive_words() -> Vec<String> {
    let alphabet = *b"xyzXYZ";
    let mut out = Vec::new();
    let mut word = [0u8; 9];
    for code in 0..6usize.pow(9) {
        let mut c = code;
        for slot in word.iter_mut().rev() {
            *slot = alphabet[c % 6];
            c /= 6;
        }
        if !(word[..3] == *b"xxy" || word[..3] == *b"xxY") {
            continue;
        }
        let count = |ch: u8| word.iter().filter(|&&c| c == ch).count();
        if !(count(b'x') + count(b'X') == 3
            && count(b'y') + count(b'Y') == 3
            && count(b'z') + count(b'Z') == 3
            && count(b'y') > count(b'Y')
            && count(b'z') > count(b'Z'))
        {
            continue;
        }
        let adj = star_adjacency(&word);
        if girth(&adj) == Some(4) && diameter(&adj) == Some(2) {
            out.push(String::from_utf8(word.to_vec()).unwrap());
        }
    }
    out
}

/// Free reduction by a stack.
pub fn free_reduce(word: &[u8]) -> Vec<u8> {
    let mut out: Vec<u8> = Vec::new();
    for &c in word {
        if out.last() == Some(&inverse(c)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

pub fn invert(word: &[u8]) -> Vec<u8> {
    word.iter().rev().map(|&c| inverse(c)).collect()
}

/// Number of homomorphisms onto `Z₂`, by trying every assignment of the
/// generators to `{0, 1}`.
pub fn surjections_to_z2(rank: usize, relators: &[Vec<i64>]) -> usize {
    (1..1u32 << rank)
        .filter(|bits| {
            relators.iter().all(|r| {
                let s: i64 = r.iter().enumerate().map(|(g, e)| if bits >> g & 1 == 1 { *e } else { 0 }).sum();
                s.rem_euclid(2) == 0
            })
        })
        .count()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Determinant by cofactor expansion (matrices here are at most 6×6).
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> =
                m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: `dₖ` is the gcd of all
/// `k×k` minors and the `k`-th factor is `dₖ / dₖ₋₁`.
pub fn invariant_factors(m: &[Vec<i128>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev = 1;
    for k in 1..=rows.min(cols) {
        let mut d = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                d = gcd(d, det(&minor));
            }
        }
        if d == 0 {
            break;
        }
        out.push(d / prev);
        prev = d;
    }
    out
}

/// Permutations of `0..k` as image vectors.
pub fn symmetric_group(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Subgroups of index exactly `k` via transitive permutation representations:
/// their number is `t / (k−1)!` where `t` counts homomorphisms to `S_k`
/// with a transitive image. Relators are `(generator, inverse)` sequences.
pub fn subgroups_of_index(rank: usize, relators: &[Vec<(usize, bool)>], k: usize) -> usize {
    let perms = symmetric_group(k);
    let inverses: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            let mut q = vec![0; k];
            for (i, &j) in p.iter().enumerate() {
                q[j] = i;
            }
            q
        })
        .collect();
    let mut choice = vec![0usize; rank];
    let mut transitive = 0usize;
    loop {
        let closes = relators.iter().all(|r| {
            (0..k).all(|start| {
                let end = r.iter().fold(start, |pt, &(g, inv)| {
                    if inv {
                        inverses[choice[g]][pt]
                    } else {
                        perms[choice[g]][pt]
                    }
                });
                end == start
            })
        });
        if closes {
            let mut seen = vec![false; k];
            seen[0] = true;
            let mut stack = vec![0];
            while let Some(p) = stack.pop() {
                for &c in &choice {
                    for q in [perms[c][p], inverses[c][p]] {
                        if !seen[q] {
                            seen[q] = true;
                            stack.push(q);
                        }
                    }
                }
            }
            if seen.iter().all(|&s| s) {
                transitive += 1;
            }
        }
        let mut g = 0;
        loop {
            if g == rank {
                let fact: usize = (1..k).product();
                return transitive / fact;
            }
            choice[g] += 1;
            if choice[g] < perms.len() {
                break;
            }
            choice[g] = 0;
            g += 1;
        }
    }
}

/// `xyzXYZ` string to `(generator, inverse)` pairs.
pub fn letters(word: &str) -> Vec<(usize, bool)> {
    word.bytes().map(|c| (vertex(c) % 3, c.is_ascii_uppercase())).collect()
}

/// Every cyclically reduced word of length `len` over `alphabet`, a string of
/// lowercase generators and their uppercase inverses.
pub fn cyclic_words(alphabet: &[u8], len: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u8>> = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        if cur.len() == len {
            if len > 0 && cur[0] != inverse(cur[len - 1]) {
                out.push(String::from_utf8(cur).unwrap());
            }
            continue;
        }
        for &c in alphabet {
            if cur.last() == Some(&inverse(c)) {
                continue;
            }
            let mut next = cur.clone();
            next.push(c);
            stack.push(next);
        }
    }
    out
}

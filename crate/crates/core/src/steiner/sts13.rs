//! The two Steiner triple systems on 13 points.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{isomorphic, Hypergraph};

/// The cyclic STS(13), developed from base blocks `{0,1,4}` and `{0,2,7}`.
pub fn sts13_cyclic() -> Hypergraph {
    let mut blocks = Vec::new();
    for base in [[0usize, 1, 4], [0, 2, 7]] {
        for t in 0..13 {
            blocks.push(base.map(|b| (b + t) % 13).to_vec());
        }
    }
    Hypergraph::from_edge_lists(13, blocks).expect("valid blocks")
}

/// A random STS(n) by hill-climbing; `n ≡ 1, 3 (mod 6)`.
pub fn random_sts(n: usize, rng: &mut impl Rng) -> Result<Hypergraph> {
    if n % 6 != 1 && n % 6 != 3 || n > 31 {
        return Err(Error::NotSteiner(format!("no STS on {n} points here")));
    }
    let target = n * (n - 1) / 6;
    // block[x][y]: the third point of the block on {x, y}
    let mut third = vec![vec![usize::MAX; n]; n];
    let mut count = 0;
    while count < target {
        let live: Vec<usize> = (0..n)
            .filter(|&x| (0..n).any(|y| y != x && third[x][y] == usize::MAX))
            .collect();
        let x = *live.choose(rng).expect("incomplete system has a live point");
        let free: Vec<usize> = (0..n)
            .filter(|&y| y != x && third[x][y] == usize::MAX)
            .collect();
        let mut pick = free.choose_multiple(rng, 2);
        let (y, z) = (*pick.next().unwrap(), *pick.next().unwrap());
        let w = third[y][z];
        if w == usize::MAX {
            count += 1;
        } else {
            for (a, b) in [(y, z), (y, w), (z, w)] {
                third[a][b] = usize::MAX;
                third[b][a] = usize::MAX;
            }
        }
        for (a, b, c) in [(x, y, z), (x, z, y), (y, z, x)] {
            third[a][b] = c;
            third[b][a] = c;
        }
    }
    let mut blocks = Vec::with_capacity(target);
    for x in 0..n {
        for y in x + 1..n {
            let z = third[x][y];
            if z > y {
                blocks.push(vec![x, y, z]);
            }
        }
    }
    Hypergraph::from_edge_lists(n, blocks)
}

/// The cyclic STS(13) and one from the other isomorphism class, found by
/// seeded random search.
pub fn sts13_pair(seed: u64) -> Result<[Hypergraph; 2]> {
    let cyclic = sts13_cyclic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let h = random_sts(13, &mut rng)?;
        if isomorphic(&cyclic, &h)?.is_none() {
            return Ok([cyclic, h]);
        }
    }
    Err(Error::NotSteiner("no second STS(13) found".into()))
}

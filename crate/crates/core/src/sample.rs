//! Seeded random inputs for property checks.
//!
//! Words have a length drawn uniformly from `0..=max_len` and uniformly
//! chosen letters, and are then freely reduced (so may come out shorter).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::crossedmod::{CrossedGenerator, CrossedWord};
use crate::freegroup::{Letter, ReducedWord};
use crate::presentation::{Presentation, RelId};
use crate::signed::Sign;
use crate::squier::{Edge, EdgePath, SignedEdge, TwoCell};
use crate::starone::{LambdaGenerator, LambdaWord};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent seed for trial `index` under `master` (splitmix64 finalizer).
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn word<R: Rng>(rng: &mut R, generators: usize, max_len: usize) -> ReducedWord {
    if generators == 0 {
        return ReducedWord::identity();
    }
    let len = rng.gen_range(0..=max_len);
    ReducedWord::reduce_letters((0..len).map(|_| Letter::new(rng.gen_range(0..generators), rng.gen_bool(0.5))))
}

pub fn sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn relation<R: Rng>(rng: &mut R, presentation: &Presentation) -> RelId {
    let ids: Vec<RelId> = presentation.relation_ids().collect();
    ids[rng.gen_range(0..ids.len())]
}

pub fn lambda_word<R: Rng>(rng: &mut R, presentation: &Presentation, max_factors: usize, max_len: usize) -> LambdaWord {
    let n = rng.gen_range(0..=max_factors);
    let generators = presentation.alphabet().len();
    LambdaWord::from_factors(
        (0..n)
            .map(|_| {
                let g = LambdaGenerator::new(relation(rng, presentation), word(rng, generators, max_len));
                (g, sign(rng))
            })
            .collect::<Vec<_>>(),
    )
}

pub fn crossed_word<R: Rng>(rng: &mut R, presentation: &Presentation, max_factors: usize, max_len: usize) -> CrossedWord {
    let n = rng.gen_range(0..=max_factors);
    let generators = presentation.alphabet().len();
    CrossedWord::from_factors(
        (0..n)
            .map(|_| {
                let g = CrossedGenerator::new(relation(rng, presentation), word(rng, generators, max_len));
                (g, sign(rng))
            })
            .collect::<Vec<_>>(),
    )
}

/// A signed edge whose domain is `vertex`.
pub fn edge_at<R: Rng>(rng: &mut R, presentation: &Presentation, vertex: &ReducedWord, max_len: usize) -> SignedEdge {
    let rel = relation(rng, presentation);
    let q = word(rng, presentation.alphabet().len(), max_len);
    let (l, r) = presentation.sides(rel).expect("relation drawn from the presentation");
    let s = sign(rng);
    let start_side = match s {
        Sign::Plus => l,
        Sign::Minus => r,
    };
    let p = vertex * &ReducedWord::product([&start_side, &q]).inverse();
    SignedEdge {
        edge: Edge::new(p, rel, q),
        sign: s,
    }
}

/// A path of up to `max_steps` random edges from `source`.
pub fn path<R: Rng>(
    rng: &mut R,
    presentation: &Presentation,
    source: &ReducedWord,
    max_steps: usize,
    max_len: usize,
) -> EdgePath {
    let n = rng.gen_range(0..=max_steps);
    let mut at = source.clone();
    let mut steps = Vec::with_capacity(n);
    for _ in 0..n {
        let e = edge_at(rng, presentation, &at, max_len);
        at = e.endpoints(presentation).expect("known relation").1;
        steps.push(e);
    }
    EdgePath::new(presentation, source.clone(), steps).expect("steps were chained")
}

/// A 2-cell whose common source is `vertex`.
pub fn two_cell_at<R: Rng>(rng: &mut R, presentation: &Presentation, vertex: &ReducedWord, max_len: usize) -> TwoCell {
    let generators = presentation.alphabet().len();
    let rel = relation(rng, presentation);
    let rel2 = relation(rng, presentation);
    let q = word(rng, generators, max_len);
    let p2 = word(rng, generators, max_len);
    let q2 = word(rng, generators, max_len);
    TwoCell::at_source(presentation, vertex, rel, q, p2, rel2, q2).expect("relations drawn from the presentation")
}

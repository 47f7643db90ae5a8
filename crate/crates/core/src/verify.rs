//! Exhaustive and sampled verification suites. Each suite checks a library
//! decider against an independent computation and records every mismatch
//! with an input that reproduces it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::boolfn::{canonical, ess, is_minor, is_minor_by_maps, minor_closure, CanonicalForm};
use crate::error::{Error, Result};
use crate::graphs::{classify_graph, classify_loopless, enumerate_graphs, Graph};
use crate::hypergraph::{
    apply_quotient, contract_pair, function_of, is_hyper_minor, isomorphic, Hypergraph,
};
use crate::irreducibility::{
    brute_force_ji, brute_force_lower_covers, cover_report, gap, gap2_classify, Gap2Shape,
};
use crate::steiner::{builtin_systems, minus_pair, steiner_report, sts13_pair};
use crate::{TruthTable, VarMap};

pub const SUITES: [&str; 8] = [
    "salomaa",
    "gap2",
    "lowercover",
    "correspondence",
    "graphs6",
    "loops5",
    "steiner",
    "quasiorder",
];

pub const DEFAULT_SEED: u64 = 20240601;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Also run the slow optional instances.
    pub extended: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            extended: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub checks: u64,
    pub failures: Vec<String>,
    /// Set for suites that sample.
    pub seed: Option<u64>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={}\tchecks={}\tfailures={}",
            self.name,
            self.checks,
            self.failures.len()
        )?;
        if let Some(s) = self.seed {
            write!(f, "\tseed={s}")?;
        }
        for fail in &self.failures {
            write!(f, "\nFAIL\t{fail}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(input());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self
    }

    fn finish(self, name: &str, seed: Option<u64>) -> SuiteResult {
        SuiteResult {
            name: name.to_string(),
            checks: self.checks,
            failures: self.failures,
            seed,
        }
    }
}

fn par_tally<T: Send, I>(items: I, f: impl Fn(T, &mut Tally) -> Result<()> + Sync) -> Result<Tally>
where
    I: IntoParallelIterator<Item = T>,
{
    items
        .into_par_iter()
        .map(|x| {
            let mut t = Tally::default();
            f(x, &mut t)?;
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

pub fn verify_suite(name: &str, opts: VerifyOptions) -> Result<SuiteResult> {
    match name {
        "salomaa" => gap_bound(),
        "gap2" => gap2_suite(),
        "lowercover" => lowercover(),
        "correspondence" => correspondence(opts.seed),
        "graphs6" => graph_suite("graphs6", 6, false),
        "loops5" => graph_suite("loops5", 5, true),
        "steiner" => steiner_suite(opts),
        "quasiorder" => quasiorder(opts.seed),
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

/// Arity-4 tables as 16-bit words, for the independent arithmetic below.
const SMALL_ARITY: usize = 4;

fn small_table(v: u64) -> TruthTable {
    TruthTable::from_u64(SMALL_ARITY, v).expect("16-bit table")
}

fn bit(t: u64, a: usize) -> u64 {
    t >> a & 1
}

fn small_ess_mask(t: u64, n: usize) -> u32 {
    (0..n)
        .filter(|&k| (0..1usize << n).any(|a| bit(t, a) != bit(t, a ^ 1 << k)))
        .fold(0, |m, k| m | 1 << k)
}

/// `x_i` replaced by `x_j`, by evaluation.
fn small_identify(t: u64, n: usize, i: usize, j: usize) -> u64 {
    (0..1usize << n).fold(0, |acc, a| {
        let b = (a & !(1 << i)) | (a >> j & 1) << i;
        acc | bit(t, b) << a
    })
}

/// Arity gap straight from its definition; `None` below two essential
/// variables.
fn gap_by_definition(t: u64, n: usize) -> Option<usize> {
    let mask = small_ess_mask(t, n);
    let e = mask.count_ones() as usize;
    if e < 2 {
        return None;
    }
    let vars: Vec<usize> = (0..n).filter(|&k| mask >> k & 1 == 1).collect();
    let mut best = usize::MAX;
    for (x, &i) in vars.iter().enumerate() {
        for &j in &vars[x + 1..] {
            let g = small_identify(t, n, i, j);
            best = best.min(e - small_ess_mask(g, n).count_ones() as usize);
        }
    }
    Some(best)
}

fn gap_bound() -> Result<SuiteResult> {
    let t = par_tally(0..1u64 << 16, |v, t| {
        let Some(want) = gap_by_definition(v, SMALL_ARITY) else {
            return Ok(());
        };
        let f = small_table(v);
        let got = gap(&f)?;
        t.check((want == 1 || want == 2) && got == want, || {
            format!("{f}\tgap={got}\tby_definition={want}")
        });
        Ok(())
    })?;
    Ok(t.finish("salomaa", None))
}

/// Classes of gap two at arity ≤ 4, from the definition alone.
pub fn gap2_classes_by_definition() -> Result<BTreeSet<CanonicalForm>> {
    let forms: Vec<Option<CanonicalForm>> = (0..1u64 << 16)
        .into_par_iter()
        .map(|v| match gap_by_definition(v, SMALL_ARITY) {
            Some(2) => canonical(&small_table(v)).map(Some),
            _ => Ok(None),
        })
        .collect::<Result<_>>()?;
    Ok(forms.into_iter().flatten().collect())
}

/// Classes of the instantiated gap-two shapes with at most 4 variables.
pub fn gap2_shape_classes() -> Result<BTreeMap<CanonicalForm, Gap2Shape>> {
    Gap2Shape::all_up_to(SMALL_ARITY)
        .into_iter()
        .map(|s| Ok((canonical(&function_of(&s.hypergraph())?)?, s)))
        .collect()
}

fn gap2_suite() -> Result<SuiteResult> {
    let expected = gap2_classes_by_definition()?;
    let shapes = gap2_shape_classes()?;
    let mut t = Tally::default();
    let found: BTreeSet<CanonicalForm> = shapes.keys().cloned().collect();
    t.check(found == expected, || {
        let missing: Vec<String> = expected.difference(&found).map(|c| c.to_string()).collect();
        let extra: Vec<String> = found.difference(&expected).map(|c| c.to_string()).collect();
        format!("shape classes differ: missing [{}] extra [{}]", missing.join(" "), extra.join(" "))
    });
    t.check(shapes.len() == Gap2Shape::all_up_to(SMALL_ARITY).len(), || {
        "two shapes share a class".into()
    });
    let per_table = par_tally(0..1u64 << 16, |v, t| {
        let Some(g) = gap_by_definition(v, SMALL_ARITY) else {
            return Ok(());
        };
        let f = small_table(v);
        let got = gap2_classify(&f)?;
        let ok = match got {
            Some(s) => g == 2 && shapes.get(&canonical(&f)?) == Some(&s),
            None => g != 2,
        };
        t.check(ok, || format!("{f}\tgap={g}\tshape={got:?}"));
        Ok(())
    })?;
    Ok(t.merge(per_table).finish("gap2", None))
}

fn lowercover() -> Result<SuiteResult> {
    let t = par_tally(0..1u64 << 16, |v, t| {
        let f = small_table(v);
        if ess(&f) < 2 {
            return Ok(());
        }
        let r = cover_report(&f)?;
        let arities: BTreeSet<usize> = r.lower_covers.iter().map(|c| ess(&c.representative)).collect();
        let one_arity = arities.len() == 1;
        let a = arities.iter().next().copied().unwrap_or(0);
        t.check(
            one_arity && (a + 1 == r.ess || a + 2 == r.ess) && (a + 2 != r.ess || r.lower_covers.len() == 1),
            || format!("{f}\tcover arities={arities:?}\tess={}", r.ess),
        );
        let mine = r
            .lower_covers
            .iter()
            .map(|c| canonical(&c.representative))
            .collect::<Result<BTreeSet<_>>>()?;
        let oracle = brute_force_lower_covers(&f)?;
        t.check(mine == oracle && mine.len() == r.lower_covers.len(), || {
            format!("{f}\tcovers={mine:?}\toracle={oracle:?}")
        });
        t.check(r.join_irreducible == (oracle.len() == 1), || {
            format!("{f}\tji={}\toracle_covers={}", r.join_irreducible, oracle.len())
        });
        Ok(())
    })?;
    Ok(t.finish("lowercover", None))
}

/// Table of a polynomial on `n ≤ 6` vertices: the XOR of its monomials,
/// where monomial `E` is true exactly on the assignments containing `E`.
fn polynomial_table(h: &Hypergraph) -> u64 {
    let n = h.n_vertices();
    h.edges().iter().fold(0u64, |acc, &e| {
        let mono = (0..1u64 << n).filter(|&a| a as u32 & e == e).fold(0, |m, a| m | 1 << a);
        acc ^ mono
    })
}

/// `f ∘ h'` on `n` variables: `a ↦ f(a ∘ h')`.
fn pullback(f: u64, map: &VarMap, n: usize) -> u64 {
    let m = map.domain_size();
    (0..1usize << n).fold(0, |acc, a| {
        let b = (0..m).fold(0usize, |b, i| b | (a >> map.apply(i) & 1) << i);
        acc | bit(f, b) << a
    })
}

fn hypergraph_from_bits(n: usize, bits: u64) -> Hypergraph {
    let edges = (0..1u32 << n).filter(|&e| bits >> e & 1 == 1).collect();
    Hypergraph::new(n, edges).expect("valid edges")
}

fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Hypergraph {
    let edges = (0..1u32 << n).filter(|_| rng.gen_bool(density)).collect();
    Hypergraph::new(n, edges).expect("valid edges")
}

fn random_map(rng: &mut ChaCha8Rng, domain: usize, codomain: usize) -> VarMap {
    let image = (0..domain).map(|_| rng.gen_range(0..codomain)).collect();
    VarMap::new(image, codomain).expect("in range")
}

/// Equivalence-class ids of every table on `0..=SMALL_ARITY` variables,
/// and how many tables of each arity fall in each class.
struct SmallClasses {
    ids: BTreeMap<CanonicalForm, usize>,
    class_of: Vec<Vec<u32>>,
    count: Vec<Vec<u64>>,
}

impl SmallClasses {
    fn new() -> Result<Self> {
        let mut ids = BTreeMap::new();
        let mut class_of = Vec::new();
        let forms_by_arity: Vec<Vec<CanonicalForm>> = (0..=SMALL_ARITY)
            .map(|n| {
                (0..1u64 << (1 << n))
                    .into_par_iter()
                    .map(|v| canonical(&TruthTable::from_u64(n, v)?))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        for forms in &forms_by_arity {
            for c in forms {
                let next = ids.len();
                ids.entry(c.clone()).or_insert(next);
            }
        }
        let mut count = vec![vec![0u64; ids.len()]; SMALL_ARITY + 1];
        for (n, forms) in forms_by_arity.iter().enumerate() {
            let row: Vec<u32> = forms.iter().map(|c| ids[c] as u32).collect();
            for &k in &row {
                count[n][k as usize] += 1;
            }
            class_of.push(row);
        }
        Ok(Self { ids, class_of, count })
    }

    /// Class ids below `f`, as a membership vector.
    fn below(&self, f: &TruthTable) -> Result<Vec<bool>> {
        let mut member = vec![false; self.ids.len()];
        for c in minor_closure(f)? {
            member[self.ids[&c]] = true;
        }
        Ok(member)
    }
}

fn correspondence(seed: u64) -> Result<SuiteResult> {
    let classes = SmallClasses::new()?;
    let closures: Vec<Vec<bool>> = {
        let mut reps: Vec<(usize, CanonicalForm)> =
            classes.ids.iter().map(|(c, &k)| (k, c.clone())).collect();
        reps.sort_unstable_by_key(|r| r.0);
        reps.par_iter()
            .map(|(_, c)| classes.below(c.table()))
            .collect::<Result<_>>()?
    };
    let maps: Vec<Vec<Vec<VarMap>>> = (0..=SMALL_ARITY)
        .map(|m| (0..=SMALL_ARITY).map(|n| VarMap::all(m, n).collect()).collect())
        .collect();

    let mut instances: Vec<(usize, u64)> = Vec::new();
    for m in 0..=SMALL_ARITY {
        instances.extend((0..1u64 << (1 << m)).map(|bits| (m, bits)));
    }
    let exhaustive = par_tally(instances, |(m, bits), t| {
        let hp = hypergraph_from_bits(m, bits);
        let fp = polynomial_table(&hp);
        let below = &closures[classes.class_of[m][fp as usize] as usize];
        let codomains = if m == 0 { 0..=SMALL_ARITY } else { 1..=SMALL_ARITY };
        for n in codomains {
            let mut reached = vec![false; 1 << (1 << n)];
            for map in &maps[m][n] {
                let q = apply_quotient(&hp, map)?;
                let lhs = polynomial_table(&q);
                let rhs = pullback(fp, map, n);
                t.check(lhs == rhs, || format!("{hp:?}\tmap={:?}\tcodomain={n}", map.image()));
                reached[lhs as usize] = true;
            }
            // quotients onto n vertices vs. n-ary minors of f_{H'}
            let n_reached = reached.iter().filter(|&&r| r).count() as u64;
            let inside = reached
                .iter()
                .enumerate()
                .all(|(v, &r)| !r || below[classes.class_of[n][v] as usize]);
            let n_minors: u64 = (0..classes.ids.len())
                .filter(|&k| below[k])
                .map(|k| classes.count[n][k])
                .sum();
            t.check(inside && n_reached == n_minors, || {
                format!("{hp:?}\tcodomain={n}\tquotients={n_reached}\tminors={n_minors}")
            });
        }
        Ok(())
    })?;

    let small = par_tally(0..=3usize, |m, t| {
        for bp in 0..1u64 << (1 << m) {
            let hp = hypergraph_from_bits(m, bp);
            let fp = function_of(&hp)?;
            for n in usize::from(m > 0)..=3 {
                for b in 0..1u64 << (1 << n) {
                    let h = hypergraph_from_bits(n, b);
                    let hyper = is_hyper_minor(&h, &hp)?;
                    let by_maps = is_minor_by_maps(&function_of(&h)?, &fp)?;
                    t.check(hyper == by_maps, || format!("{h:?}\t{hp:?}\thyper={hyper}"));
                }
            }
        }
        Ok(())
    })?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sampled = Tally::default();
    for _ in 0..200 {
        let m = rng.gen_range(5..=6);
        let n = rng.gen_range(1..=6);
        let hp = random_hypergraph(&mut rng, m, 0.15);
        let map = random_map(&mut rng, m, n);
        let q = apply_quotient(&hp, &map)?;
        let fp = function_of(&hp)?;
        let fq = function_of(&q)?;
        let rhs = pullback(polynomial_table(&hp), &map, n);
        sampled.check(polynomial_table(&q) == rhs, || {
            format!("{hp:?}\tmap={:?}\tcodomain={n}", map.image())
        });
        sampled.check(is_hyper_minor(&q, &hp)? && is_minor(&fq, &fp)?, || {
            format!("{hp:?}\tmap={:?}\tquotient not recognized as minor", map.image())
        });
        let other = random_hypergraph(&mut rng, n, 0.15);
        let hyper = is_hyper_minor(&other, &hp)?;
        let boolean = is_minor(&function_of(&other)?, &fp)?;
        sampled.check(hyper == boolean, || format!("{other:?}\t{hp:?}\thyper={hyper}"));
    }
    Ok(exhaustive
        .merge(small)
        .merge(sampled)
        .finish("correspondence", Some(seed)))
}

fn graph_suite(name: &str, max_n: usize, allow_loops: bool) -> Result<SuiteResult> {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 2..=max_n {
        graphs.extend(enumerate_graphs(n, allow_loops)?);
    }
    let t = par_tally(graphs, |g, t| {
        let f = function_of(g.hypergraph())?;
        if ess(&f) < 2 {
            return Ok(());
        }
        let verdict = if allow_loops {
            classify_graph(&g)
        } else {
            classify_loopless(&g)?
        };
        let oracle = brute_force_ji(&f)?;
        t.check(verdict.is_join_irreducible() == oracle, || {
            format!("{:?}\tverdict={verdict}\toracle={oracle}", g.hypergraph())
        });
        Ok(())
    })?;
    Ok(t.finish(name, None))
}

/// Isomorphisms between deletions extend, fixing the fresh vertex, to
/// isomorphisms between the matching contractions.
fn deletion_isos_extend(h: &Hypergraph, t: &mut Tally) -> Result<()> {
    let n = h.n_vertices();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let first = pairs[0];
    let m0 = minus_pair(h, first)?;
    let c0 = contract_pair(h, first.0, first.1)?;
    for &e in &pairs[1..] {
        let me = minus_pair(h, e)?;
        let ce = contract_pair(h, e.0, e.1)?;
        let Some(mut phi) = isomorphic(&m0, &me)? else {
            continue;
        };
        phi.push(c0.fresh_vertex);
        let map = VarMap::new(phi, n - 1)?;
        t.check(apply_quotient(&c0.hypergraph, &map)? == ce.hypergraph, || {
            format!("{h:?}\tpairs={first:?},{e:?}")
        });
    }
    Ok(())
}

fn steiner_suite(opts: VerifyOptions) -> Result<SuiteResult> {
    let mut systems: Vec<(String, Hypergraph, bool)> = builtin_systems()
        .into_iter()
        .map(|(name, h)| (name.to_string(), h, true))
        .collect();
    for n in 3..=7 {
        systems.push((format!("K{n}"), Hypergraph::complete_graph(n)?, n >= 4));
    }
    if opts.extended {
        for (k, h) in sts13_pair(opts.seed)?.into_iter().enumerate() {
            systems.push((format!("sts13-{k}"), h, true));
        }
    }
    let mut t = Tally::default();
    for (name, h, want_dh) in &systems {
        let r = steiner_report(h)?;
        let want_all = !name.starts_with("sts13");
        t.check(
            r.agrees() && (!want_all || r.join_irreducible) && (!want_dh || r.dh_is_everything()),
            || format!("{name}\t{}", r.to_tsv()),
        );
        if h.n_vertices() >= 4 {
            deletion_isos_extend(h, &mut t)?;
        }
    }
    Ok(t.finish("steiner", opts.extended.then_some(opts.seed)))
}

fn quasiorder(seed: u64) -> Result<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<(Hypergraph, VarMap, VarMap)> = (0..1000)
        .map(|_| {
            let n3 = rng.gen_range(1..=6);
            let n2 = rng.gen_range(1..=n3);
            let n1 = rng.gen_range(1..=n2);
            let h3 = random_hypergraph(&mut rng, n3, 0.2);
            let h1 = random_map(&mut rng, n3, n2);
            let h2 = random_map(&mut rng, n2, n1);
            (h3, h1, h2)
        })
        .collect();
    let mut memo: HashMap<(TruthTable, TruthTable), bool> = HashMap::new();
    let mut minor = |g: &TruthTable, f: &TruthTable| -> Result<bool> {
        if let Some(&b) = memo.get(&(g.clone(), f.clone())) {
            return Ok(b);
        }
        let b = is_minor(g, f)?;
        memo.insert((g.clone(), f.clone()), b);
        Ok(b)
    };
    let mut t = Tally::default();
    for (h3, h1, h2) in &triples {
        let repro = || format!("{h3:?}\th1={:?}\th2={:?}", h1.image(), h2.image());
        let h2g = apply_quotient(h3, h1)?;
        let h1g = apply_quotient(&h2g, h2)?;
        t.check(apply_quotient(h3, &h1.then(h2)?)? == h1g, repro);
        t.check(
            is_hyper_minor(&h1g, &h2g)? && is_hyper_minor(&h2g, h3)? && is_hyper_minor(&h1g, h3)?,
            repro,
        );
        t.check(is_hyper_minor(h3, h3)?, repro);
        let (f1, f2, f3) = (function_of(&h1g)?, function_of(&h2g)?, function_of(h3)?);
        let chain = minor(&f1, &f2)? && minor(&f2, &f3)?;
        t.check(chain && minor(&f1, &f3)? && minor(&f3, &f3)?, repro);
        if f3.arity() <= 4 {
            t.check(is_minor_by_maps(&f1, &f3)?, repro);
        }
    }
    Ok(t.finish("quasiorder", Some(seed)))
}

//! Deterministic builders for finite double categories, 2-categories and
//! functors.
//!
//! Generated tokens spell out their construction: poset morphisms are
//! `id_i` and `i<j`, commuting squares are `top|left|right|bottom`,
//! quintets append their 2-cell, and products pair tokens as `[p;q]`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bicat::{trivial_double, TwoCategoryPresentation};
use crate::category::CategoryPresentation;
use crate::double::{DoublePresentation, SquareDecl};
use crate::error::{invalid, Result};
use crate::functors::{DoubleFunctor, DoubleNaturalTransformation};
use crate::{CatFunctor, Fin2Category, FinCategory, FinDoubleCategory};

/// A partial order on `{0, …, size−1}`, stored reflexively and
/// transitively closed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosetSpec {
    size: usize,
    relation: BTreeSet<(usize, usize)>,
}

impl PosetSpec {
    /// The partial order generated by `pairs`. Fails with `InvalidInput` on
    /// out-of-range elements or cycles.
    pub fn new(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<PosetSpec> {
        if size == 0 {
            return Err(invalid("poset must have at least one element"));
        }
        let mut leq = vec![vec![false; size]; size];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (i, j) in pairs {
            if i >= size || j >= size {
                return Err(invalid(format!("pair ({i}, {j}) outside a poset of size {size}")));
            }
            leq[i][j] = true;
        }
        for k in 0..size {
            for i in 0..size {
                for j in 0..size {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        let mut relation = BTreeSet::new();
        for (i, row) in leq.iter().enumerate() {
            for (j, &le) in row.iter().enumerate() {
                if le {
                    if i != j && leq[j][i] {
                        return Err(invalid(format!("{i} and {j} lie on a cycle")));
                    }
                    relation.insert((i, j));
                }
            }
        }
        Ok(PosetSpec { size, relation })
    }

    /// `0 < 1 < … < n−1`.
    pub fn chain(n: usize) -> PosetSpec {
        PosetSpec::new(n, (1..n).map(|i| (i - 1, i))).expect("chains are posets")
    }

    pub fn antichain(n: usize) -> PosetSpec {
        PosetSpec::new(n, []).expect("antichains are posets")
    }

    /// `0 < 1, 2 < 3` with 1 and 2 incomparable.
    pub fn diamond() -> PosetSpec {
        PosetSpec::new(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).expect("diamond is a poset")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.relation.contains(&(i, j))
    }

    pub fn relation(&self) -> &BTreeSet<(usize, usize)> {
        &self.relation
    }

    /// One naturally labelled representative of every isomorphism class of
    /// posets with 1 to `n` elements.
    pub fn all_up_to(n: usize) -> Vec<PosetSpec> {
        let mut out = Vec::new();
        for size in 1..=n {
            let strict: Vec<(usize, usize)> = (0..size)
                .flat_map(|i| (i + 1..size).map(move |j| (i, j)))
                .collect();
            let perms = permutations(size);
            let mut seen = BTreeSet::new();
            for mask in 0u32..(1 << strict.len()) {
                let pairs: BTreeSet<(usize, usize)> = strict
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let closed = pairs.iter().all(|&(i, k)| {
                    pairs
                        .iter()
                        .filter(|&&(k2, _)| k2 == k)
                        .all(|&(_, j)| pairs.contains(&(i, j)))
                });
                if !closed {
                    continue;
                }
                let canon = perms
                    .iter()
                    .map(|p| {
                        let mut r: Vec<(usize, usize)> =
                            pairs.iter().map(|&(i, j)| (p[i], p[j])).collect();
                        r.sort_unstable();
                        r
                    })
                    .min()
                    .expect("at least one permutation");
                if seen.insert(canon) {
                    out.push(PosetSpec::new(size, pairs).expect("closed strict order"));
                }
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn poset_morphism(i: usize, j: usize) -> String {
    if i == j {
        format!("id_{i}")
    } else {
        format!("{i}<{j}")
    }
}

/// The thin category of a poset: objects `0…n−1`, one morphism `i<j` for
/// each strict relation, identities `id_i`.
pub fn gen_poset_category(p: &PosetSpec) -> Result<FinCategory> {
    let rel = &p.relation;
    let pres = CategoryPresentation {
        objects: (0..p.size).map(|i| i.to_string()).collect(),
        morphisms: rel
            .iter()
            .map(|&(i, j)| (poset_morphism(i, j), i.to_string(), j.to_string()))
            .collect(),
        identities: (0..p.size).map(|i| (i.to_string(), poset_morphism(i, i))).collect(),
        compositions: rel
            .iter()
            .flat_map(|&(i, j)| {
                rel.iter()
                    .filter(move |&&(j2, _)| j2 == j)
                    .map(move |&(_, k)| (poset_morphism(j, k), poset_morphism(i, j), poset_morphism(i, k)))
            })
            .collect(),
    };
    FinCategory::from_presentation(&pres)
}

/// All monotone maps between two posets, as functors of their thin
/// categories.
pub fn poset_functors(k: &PosetSpec, l: &PosetSpec) -> Vec<CatFunctor> {
    let ck = gen_poset_category(k).expect("valid poset");
    let cl = gen_poset_category(l).expect("valid poset");
    let mut out = Vec::new();
    let mut map = vec![0usize; k.size];
    loop {
        if k.relation.iter().all(|&(i, j)| l.leq(map[i], map[j])) {
            out.push(poset_map_functor(&ck, &cl, &map));
        }
        let mut pos = 0;
        loop {
            if pos == k.size {
                return out;
            }
            map[pos] += 1;
            if map[pos] < l.size {
                break;
            }
            map[pos] = 0;
            pos += 1;
        }
    }
}

fn poset_map_functor(ck: &FinCategory, cl: &FinCategory, map: &[usize]) -> CatFunctor {
    let obj = (0..ck.object_count())
        .map(|x| {
            let i: usize = ck.object(x).as_str().parse().expect("numeric object");
            cl.object_index(&map[i].to_string()).expect("object of target")
        })
        .collect();
    let mor = (0..ck.morphism_count())
        .map(|m| {
            let i: usize = ck.object(ck.src(m)).as_str().parse().expect("numeric object");
            let j: usize = ck.object(ck.tgt(m)).as_str().parse().expect("numeric object");
            cl.morphism_index(&poset_morphism(map[i], map[j]))
                .expect("monotone map")
        })
        .collect();
    CatFunctor::from_indices(ck.clone(), cl.clone(), obj, mor)
}

/// The constant functors at `lo ≤ hi` from `k` to `l`, with the
/// transformation whose every component is `lo<hi`.
pub fn constant_transformation(
    k: &PosetSpec,
    l: &PosetSpec,
    lo: usize,
    hi: usize,
) -> Result<(CatFunctor, CatFunctor, Vec<usize>)> {
    if lo >= l.size || hi >= l.size || !l.leq(lo, hi) {
        return Err(invalid(format!("{lo} <= {hi} does not hold in the target")));
    }
    let ck = gen_poset_category(k)?;
    let cl = gen_poset_category(l)?;
    let u = poset_map_functor(&ck, &cl, &vec![lo; k.size]);
    let v = poset_map_functor(&ck, &cl, &vec![hi; k.size]);
    let a = cl.morphism_index(&poset_morphism(lo, hi)).expect("relation holds");
    Ok((u, v, vec![a; k.size]))
}

type Quad = (usize, usize, usize, usize);

fn sq_token(k: &FinCategory, (a, f, g, b): Quad) -> String {
    format!("{}|{}|{}|{}", k.morphism(a), k.morphism(f), k.morphism(g), k.morphism(b))
}

/// Commuting squares `(top, left, right, bottom)` of a finite category,
/// in lexicographic index order.
fn commuting_quads(k: &FinCategory) -> Vec<Quad> {
    let mut out = Vec::new();
    for a in 0..k.morphism_count() {
        for &f in k.outgoing(k.src(a)) {
            for &g in k.outgoing(k.tgt(a)) {
                let ga = k.compose(g, a).expect("composable");
                for &b in k.outgoing(k.tgt(f)) {
                    if k.tgt(b) == k.tgt(g) && k.compose(b, f) == Some(ga) {
                        out.push((a, f, g, b));
                    }
                }
            }
        }
    }
    out
}

/// The double category of commuting squares of `k`: vertical and
/// horizontal morphisms are the morphisms of `k` and squares paste by
/// composing their edges.
pub fn gen_commuting_squares(k: &FinCategory) -> Result<FinDoubleCategory> {
    if !k.validate().ok() {
        return Err(invalid("base category fails validation"));
    }
    let quads = commuting_quads(k);
    let set: BTreeSet<Quad> = quads.iter().copied().collect();
    let name = |q: Quad| sq_token(k, q);
    let m = |x: usize| k.morphism(x).to_string();
    let cp = k.to_presentation();
    let mut by_left: BTreeMap<usize, Vec<Quad>> = BTreeMap::new();
    let mut by_top: BTreeMap<usize, Vec<Quad>> = BTreeMap::new();
    for &q in &quads {
        by_left.entry(q.1).or_default().push(q);
        by_top.entry(q.0).or_default().push(q);
    }
    let mut vertical_compositions = Vec::new();
    let mut square_compositions = Vec::new();
    for &(a, f, g, b) in &quads {
        // Ψ below Φ = (a, f, g, b): Ψ has top b
        for &(_, f2, g2, c) in by_top.get(&b).into_iter().flatten() {
            let r = (
                a,
                k.compose(f2, f).expect("composable"),
                k.compose(g2, g).expect("composable"),
                c,
            );
            debug_assert!(set.contains(&r));
            vertical_compositions.push((name((b, f2, g2, c)), name((a, f, g, b)), name(r)));
        }
        // Ψ right of Φ: Ψ has left edge g
        for &(a2, _, h, b2) in by_left.get(&g).into_iter().flatten() {
            let r = (
                k.compose(a2, a).expect("composable"),
                f,
                h,
                k.compose(b2, b).expect("composable"),
            );
            debug_assert!(set.contains(&r));
            square_compositions.push((name((a2, g, h, b2)), name((a, f, g, b)), name(r)));
        }
    }
    let p = DoublePresentation {
        c0: cp.clone(),
        horizontal: cp.morphisms.clone(),
        horizontal_identities: cp.identities.clone(),
        horizontal_compositions: cp.compositions.clone(),
        squares: quads
            .iter()
            .map(|&(a, f, g, b)| SquareDecl {
                name: name((a, f, g, b)),
                dom: m(a),
                cod: m(b),
                vsrc: m(f),
                vtgt: m(g),
            })
            .collect(),
        vertical_identities: (0..k.morphism_count())
            .map(|a| {
                let q = (a, k.identity(k.src(a)), k.identity(k.tgt(a)), a);
                (m(a), name(q))
            })
            .collect(),
        vertical_compositions,
        square_identities: (0..k.morphism_count())
            .map(|f| {
                let q = (k.identity(k.src(f)), f, f, k.identity(k.tgt(f)));
                (m(f), name(q))
            })
            .collect(),
        square_compositions,
    };
    FinDoubleCategory::from_presentation(&p)
}

/// Same as [`bicat::trivial_double`](crate::bicat::trivial_double).
pub fn gen_trivial(b: &Fin2Category) -> Result<FinDoubleCategory> {
    trivial_double(b)
}

type Quint = (usize, usize, usize, usize, usize);

/// Quintets `(a, f, g, b, α)` with `α: g∘a ⇒ b∘f` a 2-cell of `k`.
pub fn gen_quintet(k: &Fin2Category) -> Result<FinDoubleCategory> {
    if !k.validate().ok() {
        return Err(invalid("2-category fails validation"));
    }
    let n1 = k.cells1().len();
    let out_of = |x: usize| (0..n1).filter(move |&a| k.src0(a) == x);
    let mut quints = Vec::new();
    for a in 0..n1 {
        for f in out_of(k.src0(a)) {
            for g in out_of(k.tgt0(a)) {
                let ga = k.hcomp1(g, a).expect("composable");
                for b in out_of(k.tgt0(f)).filter(|&b| k.tgt0(b) == k.tgt0(g)) {
                    let bf = k.hcomp1(b, f).expect("composable");
                    for alpha in k.hom2(ga, bf) {
                        quints.push((a, f, g, b, alpha));
                    }
                }
            }
        }
    }
    let c1 = |x: usize| k.cells1()[x].to_string();
    let name = |(a, f, g, b, al): Quint| {
        format!("{}|{}|{}|{}|{}", c1(a), c1(f), c1(g), c1(b), k.cells2()[al])
    };
    let v2 = |b: usize, a: usize| k.vcomp2(b, a).expect("composable 2-cells");
    let h2 = |b: usize, a: usize| k.hcomp2(b, a).expect("composable 2-cells");
    let h1 = |b: usize, a: usize| k.hcomp1(b, a).expect("composable 1-cells");
    let mut by_top: BTreeMap<usize, Vec<Quint>> = BTreeMap::new();
    let mut by_left: BTreeMap<usize, Vec<Quint>> = BTreeMap::new();
    for &q in &quints {
        by_top.entry(q.0).or_default().push(q);
        by_left.entry(q.1).or_default().push(q);
    }
    let mut vertical_compositions = Vec::new();
    let mut square_compositions = Vec::new();
    for &phi @ (a, f, g, b, alpha) in &quints {
        for &psi @ (_, f2, g2, c, beta) in by_top.get(&b).into_iter().flatten() {
            let cell = v2(h2(beta, k.id2(f)), h2(k.id2(g2), alpha));
            let r = (a, h1(f2, f), h1(g2, g), c, cell);
            vertical_compositions.push((name(psi), name(phi), name(r)));
        }
        for &psi @ (a2, _, h, b2, beta) in by_left.get(&g).into_iter().flatten() {
            let cell = v2(h2(k.id2(b2), alpha), h2(beta, k.id2(a)));
            let r = (h1(a2, a), f, h, h1(b2, b), cell);
            square_compositions.push((name(psi), name(phi), name(r)));
        }
    }
    let tp = k.to_presentation();
    let c0 = CategoryPresentation {
        objects: tp.cells0.clone(),
        morphisms: tp.cells1.clone(),
        identities: tp.identities1.clone(),
        compositions: tp.compositions1.clone(),
    };
    let p = DoublePresentation {
        c0,
        horizontal: tp.cells1,
        horizontal_identities: tp.identities1,
        horizontal_compositions: tp.compositions1,
        squares: quints
            .iter()
            .map(|&q| SquareDecl {
                name: name(q),
                dom: c1(q.0),
                cod: c1(q.3),
                vsrc: c1(q.1),
                vtgt: c1(q.2),
            })
            .collect(),
        vertical_identities: (0..n1)
            .map(|a| {
                let q = (a, k.id1(k.src0(a)), k.id1(k.tgt0(a)), a, k.id2(a));
                (c1(a), name(q))
            })
            .collect(),
        vertical_compositions,
        square_identities: (0..n1)
            .map(|f| {
                let q = (k.id1(k.src0(f)), f, f, k.id1(k.tgt0(f)), k.id2(f));
                (c1(f), name(q))
            })
            .collect(),
        square_compositions,
    };
    FinDoubleCategory::from_presentation(&p)
}

fn pair(a: &str, b: &str) -> String {
    format!("[{a};{b}]")
}

/// Componentwise product.
pub fn gen_product(c: &FinDoubleCategory, d: &FinDoubleCategory) -> Result<FinDoubleCategory> {
    for (what, x) in [("left", c), ("right", d)] {
        if !x.validate().ok() {
            return Err(invalid(format!("{what} factor fails validation")));
        }
    }
    let (p, q) = (c.to_presentation(), d.to_presentation());
    let pairs = |xs: &[String], ys: &[String]| -> Vec<String> {
        xs.iter().flat_map(|x| ys.iter().map(move |y| pair(x, y))).collect()
    };
    let triples = |xs: &[(String, String, String)], ys: &[(String, String, String)]| {
        xs.iter()
            .flat_map(|x| {
                ys.iter()
                    .map(move |y| (pair(&x.0, &y.0), pair(&x.1, &y.1), pair(&x.2, &y.2)))
            })
            .collect::<Vec<_>>()
    };
    let doubles = |xs: &[(String, String)], ys: &[(String, String)]| {
        xs.iter()
            .flat_map(|x| ys.iter().map(move |y| (pair(&x.0, &y.0), pair(&x.1, &y.1))))
            .collect::<Vec<_>>()
    };
    let out = DoublePresentation {
        c0: CategoryPresentation {
            objects: pairs(&p.c0.objects, &q.c0.objects),
            morphisms: triples(&p.c0.morphisms, &q.c0.morphisms),
            identities: doubles(&p.c0.identities, &q.c0.identities),
            compositions: triples(&p.c0.compositions, &q.c0.compositions),
        },
        horizontal: triples(&p.horizontal, &q.horizontal),
        horizontal_identities: doubles(&p.horizontal_identities, &q.horizontal_identities),
        horizontal_compositions: triples(&p.horizontal_compositions, &q.horizontal_compositions),
        squares: p
            .squares
            .iter()
            .flat_map(|x| {
                q.squares.iter().map(move |y| SquareDecl {
                    name: pair(&x.name, &y.name),
                    dom: pair(&x.dom, &y.dom),
                    cod: pair(&x.cod, &y.cod),
                    vsrc: pair(&x.vsrc, &y.vsrc),
                    vtgt: pair(&x.vtgt, &y.vtgt),
                })
            })
            .collect(),
        vertical_identities: doubles(&p.vertical_identities, &q.vertical_identities),
        vertical_compositions: triples(&p.vertical_compositions, &q.vertical_compositions),
        square_identities: doubles(&p.square_identities, &q.square_identities),
        square_compositions: triples(&p.square_compositions, &q.square_compositions),
    };
    FinDoubleCategory::from_presentation(&out)
}

fn s(x: &str) -> String {
    x.to_string()
}

/// A one-object 2-category whose only 1-cell is the identity and whose
/// 2-cells form a finite commutative monoid under both compositions.
fn one_cell_monoid(elements: &[&str], unit: &str, mul: impl Fn(&str, &str) -> String) -> Fin2Category {
    let mut table = Vec::new();
    for x in elements {
        for y in elements {
            table.push((s(x), s(y), mul(x, y)));
        }
    }
    let p = TwoCategoryPresentation {
        cells0: vec![s("*")],
        cells1: vec![(s("id_*"), s("*"), s("*"))],
        identities1: vec![(s("*"), s("id_*"))],
        compositions1: vec![(s("id_*"), s("id_*"), s("id_*"))],
        cells2: elements.iter().map(|x| (s(x), s("id_*"), s("id_*"))).collect(),
        identities2: vec![(s("id_*"), s(unit))],
        vertical_compositions2: table.clone(),
        horizontal_compositions2: table,
    };
    Fin2Category::from_presentation(&p).expect("well-formed monoid tables")
}

/// The terminal 2-category: one cell in each dimension.
pub fn terminal() -> Fin2Category {
    one_cell_monoid(&["1"], "1", |_, _| s("1"))
}

/// One 0-cell, one 1-cell, 2-cells `1` and `e` with `e·e = e`.
pub fn idempotent_monoid() -> Fin2Category {
    one_cell_monoid(&["1", "e"], "1", |x, y| {
        if x == "e" || y == "e" {
            s("e")
        } else {
            s("1")
        }
    })
}

/// A one-object thin 2-category from a commutative monoid on
/// `{0, …, n−1}` that is monotone for the usual order: 1-cells are the
/// elements, 2-cells `i<=j` witness the order.
fn ordered_monoid(n: usize, op: impl Fn(usize, usize) -> usize) -> Fin2Category {
    let le = |i: usize, j: usize| format!("{i}<={j}");
    let mut p = TwoCategoryPresentation {
        cells0: vec![s("*")],
        identities1: vec![(s("*"), s("0"))],
        ..Default::default()
    };
    for i in 0..n {
        p.cells1.push((i.to_string(), s("*"), s("*")));
        p.identities2.push((i.to_string(), le(i, i)));
        for j in 0..n {
            p.compositions1.push((i.to_string(), j.to_string(), op(i, j).to_string()));
        }
    }
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    for &(i, j) in &cells {
        p.cells2.push((le(i, j), i.to_string(), j.to_string()));
        for &(k, l) in &cells {
            if k == j {
                p.vertical_compositions2.push((le(j, l), le(i, j), le(i, l)));
            }
            p.horizontal_compositions2
                .push((le(k, l), le(i, j), le(op(k, i), op(l, j))));
        }
    }
    Fin2Category::from_presentation(&p).expect("well-formed ordered monoid tables")
}

/// `{0, …, n−1}` under `max`.
pub fn max_monoid(n: usize) -> Fin2Category {
    ordered_monoid(n, usize::max)
}

/// `{0, …, n−1}` under addition truncated at `n−1`.
pub fn truncated_addition(n: usize) -> Fin2Category {
    ordered_monoid(n, move |i, j| (i + j).min(n - 1))
}

/// A category viewed as a 2-category with identity 2-cells `id_m` only.
pub fn locally_discrete(k: &FinCategory) -> Fin2Category {
    let p = k.to_presentation();
    let cell = |m: &str| format!("id_{m}");
    let t = TwoCategoryPresentation {
        cells0: p.objects.clone(),
        cells1: p.morphisms.clone(),
        identities1: p.identities.clone(),
        compositions1: p.compositions.clone(),
        cells2: p.morphisms.iter().map(|(m, _, _)| (cell(m), m.clone(), m.clone())).collect(),
        identities2: p.morphisms.iter().map(|(m, _, _)| (m.clone(), cell(m))).collect(),
        vertical_compositions2: p.morphisms.iter().map(|(m, _, _)| (cell(m), cell(m), cell(m))).collect(),
        horizontal_compositions2: p
            .compositions
            .iter()
            .map(|(g, f, h)| (cell(g), cell(f), cell(h)))
            .collect(),
    };
    Fin2Category::from_presentation(&t).expect("well-formed locally discrete tables")
}

/// `Sq(u): Sq(K) → Sq(L)` applying `u` to every edge.
pub fn gen_sq_functor(u: &CatFunctor) -> Result<DoubleFunctor> {
    if !u.validate().ok() {
        return Err(invalid("functor fails validation"));
    }
    let (k, l) = (u.source(), u.target());
    let src = gen_commuting_squares(k)?;
    let tgt = gen_commuting_squares(l)?;
    let um = |m: usize| u.map_morphism(m);
    let sq = commuting_quads(k)
        .into_iter()
        .map(|(a, f, g, b)| {
            tgt.square_index(&sq_token(l, (um(a), um(f), um(g), um(b))))
                .expect("functors preserve commuting squares")
        })
        .collect::<Vec<_>>();
    // squares of `src` are indexed in token order, quads in index order
    let order: Vec<usize> = commuting_quads(k)
        .into_iter()
        .map(|q| src.square_index(&sq_token(k, q)).expect("generated square"))
        .collect();
    let mut sq_map = vec![0; sq.len()];
    for (i, &q) in order.iter().enumerate() {
        sq_map[q] = sq[i];
    }
    let obj = (0..k.object_count()).map(|x| u.map_object(x)).collect();
    let mor: Vec<usize> = (0..k.morphism_count()).map(um).collect();
    Ok(DoubleFunctor::from_indices(src, tgt, obj, mor.clone(), mor, sq_map))
}

/// `Sq(α): Sq(u) ⇒ Sq(v)` for a natural transformation `α: u ⇒ v` given
/// by its components.
pub fn gen_sq_transformation(
    u: &CatFunctor,
    v: &CatFunctor,
    alpha: &[usize],
) -> Result<DoubleNaturalTransformation> {
    let fu = gen_sq_functor(u)?;
    let fv = gen_sq_functor(v)?;
    let (k, l) = (u.source(), u.target());
    if alpha.len() != k.object_count() {
        return Err(invalid("one component per object is required"));
    }
    let eta1 = (0..k.morphism_count())
        .map(|a| {
            let q = (u.map_morphism(a), alpha[k.src(a)], alpha[k.tgt(a)], v.map_morphism(a));
            fu.target()
                .square_index(&sq_token(l, q))
                .ok_or_else(|| invalid("components are not natural"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DoubleNaturalTransformation::from_indices(fu, fv, alpha.to_vec(), eta1))
}

/// Token maps of a 2-functor induce a double functor of trivial double
/// categories.
pub fn gen_trivial_functor(
    b: &Fin2Category,
    b2: &Fin2Category,
    cells0: &[(String, String)],
    cells1: &[(String, String)],
    cells2: &[(String, String)],
) -> Result<DoubleFunctor> {
    let (s, t) = (trivial_double(b)?, trivial_double(b2)?);
    let vertical = cells0
        .iter()
        .map(|(x, y)| (format!("id_{x}"), format!("id_{y}")))
        .collect();
    DoubleFunctor::from_maps(
        s,
        t,
        &crate::FunctorPresentation {
            objects: cells0.to_vec(),
            vertical,
            horizontal: cells1.to_vec(),
            squares: cells2.to_vec(),
        },
    )
}

/// Small 2-categories: each has at most three 1-cells.
pub fn corpus_two_categories() -> Vec<(String, Fin2Category)> {
    let mut out = vec![
        (s("terminal"), terminal()),
        (s("idempotent"), idempotent_monoid()),
        (s("max2"), max_monoid(2)),
        (s("max3"), max_monoid(3)),
        (s("trunc2"), truncated_addition(2)),
        (s("trunc3"), truncated_addition(3)),
    ];
    for (i, k) in PosetSpec::all_up_to(2).iter().enumerate() {
        out.push((format!("discrete-poset{i}"), locally_discrete(&gen_poset_category(k).expect("valid"))));
    }
    out
}

/// Thin 2-categories used for quintets: ordered monoids with at most four
/// elements and every poset with at most four elements.
pub fn corpus_thin_two_categories() -> Vec<(String, Fin2Category)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        out.push((format!("max{n}"), max_monoid(n)));
        out.push((format!("trunc{n}"), truncated_addition(n)));
    }
    for (i, k) in PosetSpec::all_up_to(4).iter().enumerate() {
        out.push((format!("poset{i}"), locally_discrete(&gen_poset_category(k).expect("valid"))));
    }
    out
}

/// The double categories every property is checked on.
pub fn corpus() -> Vec<(String, FinDoubleCategory)> {
    let mut out = Vec::new();
    for (name, b) in corpus_two_categories() {
        out.push((format!("trivial-{name}"), gen_trivial(&b).expect("valid 2-category")));
    }
    for (i, k) in PosetSpec::all_up_to(4).iter().enumerate() {
        let c = gen_commuting_squares(&gen_poset_category(k).expect("valid")).expect("valid");
        out.push((format!("sq-poset{i}"), c));
    }
    for (name, b) in corpus_thin_two_categories() {
        out.push((format!("quintet-{name}"), gen_quintet(&b).expect("valid 2-category")));
    }
    out.push((s("quintet-idempotent"), gen_quintet(&idempotent_monoid()).expect("valid")));
    let factors = product_factors();
    for i in 0..factors.len() {
        for j in i..factors.len() {
            let (a, c) = (&factors[i], &factors[j]);
            out.push((
                format!("product-{}-{}", a.0, c.0),
                gen_product(&a.1, &c.1).expect("valid factors"),
            ));
        }
    }
    out
}

fn product_factors() -> Vec<(String, FinDoubleCategory)> {
    let sq = |k: PosetSpec| gen_commuting_squares(&gen_poset_category(&k).expect("valid")).expect("valid");
    vec![
        (s("sq2"), sq(PosetSpec::chain(2))),
        (s("sqa2"), sq(PosetSpec::antichain(2))),
        (s("idem"), gen_trivial(&idempotent_monoid()).expect("valid")),
        (s("qmax2"), gen_quintet(&max_monoid(2)).expect("valid")),
    ]
}

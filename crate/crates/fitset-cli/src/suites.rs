//! The verification suites. Each suite maps one prepared corpus entry to a
//! deterministic list of theorem reports. Failed checks are report data,
//! never process errors; computations whose preconditions do not hold are
//! flagged as skipped with the reason.

use std::collections::BTreeMap;

use anyhow::{anyhow, Result};
use serde::Serialize;

use fitset_core::classes::ClassPredicate;
use fitset_core::fitting::{self, FittingSet};
use fitset_core::hfunction::{self, HFunction};
use fitset_core::injectors;
use fitset_core::lattice::SubgroupLattice;
use fitset_core::primes::{pi_part, Pi, PrimeSet};
use fitset_core::theorems::{self, CheckItem, TheoremReport};

use crate::corpus::{CorpusEntry, SuiteDecl};

/// Order bound above which the products suite is skipped.
const PRODUCTS_ORDER_BOUND: usize = 48;

/// One verified statement instance: the subject names the Fitting set,
/// class or parameters the report speaks about.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteItem {
    pub subject: String,
    pub report: TheoremReport,
}

/// Work not performed, with the reason.
#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub subject: String,
    pub reason: String,
}

/// Everything one suite declaration produced on one entry.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    pub items: Vec<SuiteItem>,
    pub skipped: Vec<Skipped>,
}

/// A corpus entry with its lattice and all Fitting sets built once.
pub struct EntryContext {
    pub lattice: SubgroupLattice,
    /// Declared sets first (in declaration order), then the catalog traces
    /// that do not duplicate a declared set.
    pub sets: Vec<(String, FittingSet)>,
    /// H-functions from declared "slr" specs.
    pub hfunctions: Vec<(String, HFunction)>,
    /// Declared specs that failed their preconditions.
    pub set_skips: Vec<Skipped>,
}

/// The classes whose traces every group is tested against.
fn catalog_classes(sigma: &PrimeSet) -> Vec<ClassPredicate> {
    let mut out = vec![
        ClassPredicate::Trivial,
        ClassPredicate::Nilpotent,
        ClassPredicate::Soluble,
        ClassPredicate::All,
    ];
    for p in sigma.iter() {
        out.push(ClassPredicate::PGroup(p));
        out.push(ClassPredicate::PiClosed(Pi::In(PrimeSet::new([p]))));
    }
    out
}

/// The Fitting classes used as product factors.
fn product_classes(sigma: &PrimeSet) -> Vec<ClassPredicate> {
    let mut out = vec![ClassPredicate::Nilpotent];
    for p in sigma.iter() {
        out.push(ClassPredicate::PGroup(p));
        out.push(ClassPredicate::PiGroup(Pi::In(PrimeSet::new([p]))));
    }
    out
}

/// The constant H-function assigning the soluble pi-group trace to every
/// prime of pi: full and invariable, the workhorse for the pullback route.
fn catalog_hfunction(lat: &SubgroupLattice, pi: &PrimeSet) -> Result<HFunction> {
    let mut assignments = BTreeMap::new();
    for p in pi.iter() {
        let f = fitting::trace(lat, &ClassPredicate::SolublePi(Pi::In(pi.clone())))?;
        assignments.insert(p, f);
    }
    Ok(hfunction::slr(pi, assignments)?)
}

/// Build the lattice and every Fitting set of the entry.
pub fn prepare(entry: &CorpusEntry) -> Result<EntryContext> {
    let lattice = entry
        .group
        .lattice()
        .map_err(|e| anyhow!("{}: building the lattice: {e}", entry.file))?;
    let mut sets: Vec<(String, FittingSet)> = Vec::new();
    let mut hfunctions = Vec::new();
    let mut set_skips = Vec::new();

    for (i, spec) in entry.doc.fitting_sets.iter().enumerate() {
        match fitting::from_spec_json(&lattice, spec) {
            Ok(f) => {
                let subject = format!("set[{i}] {}", f.provenance());
                if spec.get("kind").and_then(serde_json::Value::as_str) == Some("slr") {
                    match fitting::hfunction_from_spec_json(&lattice, spec) {
                        Ok(h) => hfunctions.push((subject.clone(), h)),
                        Err(e) => set_skips.push(Skipped {
                            subject: subject.clone(),
                            reason: e.to_string(),
                        }),
                    }
                }
                sets.push((subject, f));
            }
            Err(e) => set_skips.push(Skipped {
                subject: format!("set[{i}]"),
                reason: e.to_string(),
            }),
        }
    }

    for class in catalog_classes(&entry.group.sigma()) {
        match fitting::trace(&lattice, &class) {
            Ok(f) => {
                if sets.iter().any(|(_, x)| x.same_members(&f)) {
                    continue;
                }
                sets.push((format!("catalog {}", f.provenance()), f));
            }
            Err(e) => set_skips.push(Skipped {
                subject: format!("catalog trace({class})"),
                reason: e.to_string(),
            }),
        }
    }

    Ok(EntryContext {
        lattice,
        sets,
        hfunctions,
        set_skips,
    })
}

/// Collector that turns check closures into items or skip records.
struct Sink {
    items: Vec<SuiteItem>,
    skipped: Vec<Skipped>,
}

impl Sink {
    fn new() -> Sink {
        Sink {
            items: Vec::new(),
            skipped: Vec::new(),
        }
    }

    fn add(&mut self, subject: impl Into<String>, outcome: fitset_core::Result<TheoremReport>) {
        let subject = subject.into();
        match outcome {
            Ok(report) => self.items.push(SuiteItem { subject, report }),
            Err(e) => self.skipped.push(Skipped {
                subject,
                reason: e.to_string(),
            }),
        }
    }

    fn skip(&mut self, subject: impl Into<String>, reason: impl Into<String>) {
        self.skipped.push(Skipped {
            subject: subject.into(),
            reason: reason.into(),
        });
    }

    fn into_result(self, decl: &SuiteDecl) -> SuiteResult {
        SuiteResult {
            suite: decl.canonical_name(),
            pi: decl.pi.clone(),
            k: decl.k,
            items: self.items,
            skipped: self.skipped,
        }
    }
}

/// Run one declared suite on a prepared entry.
pub fn run_suite(ctx: &EntryContext, decl: &SuiteDecl) -> SuiteResult {
    let mut sink = Sink::new();
    let name = decl.canonical_name();
    let pi = decl.pi_set();

    let needs_pi = matches!(
        name.as_str(),
        "semilocal" | "theorem-a2" | "theorem-a3" | "theorem-b" | "prop-5-6" | "corollaries"
    );
    if needs_pi && pi.is_none() {
        sink.skip(name.clone(), "suite needs a \"pi\" parameter");
        return sink.into_result(decl);
    }

    match name.as_str() {
        "lattice-invariants" => suite_lattice_invariants(ctx, &mut sink),
        "fitting-axioms" => suite_fitting_axioms(ctx, &mut sink),
        "products" => suite_products(ctx, &mut sink),
        "semilocal" => suite_semilocal(ctx, &pi.unwrap(), &mut sink),
        "theorem-a1" => suite_theorem_a(ctx, 1, &PrimeSet::empty(), &mut sink),
        "theorem-a2" => suite_theorem_a(ctx, 2, &pi.unwrap(), &mut sink),
        "theorem-a3" => suite_theorem_a(ctx, 3, &pi.unwrap(), &mut sink),
        "theorem-b" => suite_theorem_b(ctx, &pi.unwrap(), &mut sink),
        "prop-5-6" => suite_prop_5_6(ctx, &pi.unwrap(), &mut sink),
        "corollaries" => suite_corollaries(ctx, &pi.unwrap(), decl.k.unwrap_or(1), &mut sink),
        "counterexample-search" => suite_counterexample_search(ctx, &mut sink),
        other => sink.skip(other.to_string(), "unknown suite"),
    }
    sink.into_result(decl)
}

/// Structural invariants of the subgroup lattice itself.
fn suite_lattice_invariants(ctx: &EntryContext, sink: &mut Sink) {
    let lat = &ctx.lattice;
    let g = lat.group().clone();
    let report = TheoremReport::assemble("lattice-invariants", Vec::new(), || {
        let mut out = Vec::new();

        let mut closed = true;
        let mut lagrange = true;
        let mut ordered = true;
        for i in 0..lat.len() {
            closed &= g.is_subgroup_mask(lat.mask(i)) && lat.mask(i).count() == lat.order(i);
            lagrange &= g.order() % lat.order(i) == 0;
            if i > 0 {
                ordered &= (lat.order(i - 1), lat.mask(i - 1)) < (lat.order(i), lat.mask(i));
            }
        }
        out.push(CheckItem::of("every mask is a closed subgroup", closed, || {
            "a mask is not multiplication-closed".into()
        }));
        out.push(CheckItem::of("every order divides the group order", lagrange, || {
            "Lagrange fails".into()
        }));
        out.push(CheckItem::of(
            "subgroups are sorted by (order, mask)",
            ordered,
            || "index order disagrees with (order, mask)".into(),
        ));
        out.push(CheckItem::of(
            "first entry is the trivial subgroup, last is the group",
            lat.trivial_index() == 0
                && lat.full_index() == lat.len() - 1
                && lat.order(0) == 1
                && lat.order(lat.len() - 1) == g.order(),
            || "endpoints are wrong".into(),
        ));

        let mut seen = vec![false; lat.len()];
        let mut orbits_ok = true;
        for class in lat.classes() {
            for &i in class {
                let i = i as usize;
                if std::mem::replace(&mut seen[i], true) {
                    orbits_ok = false;
                }
                let nn = lat.order(lat.normalizer_index(i));
                orbits_ok &= class.len() == g.order() / nn;
            }
        }
        orbits_ok &= seen.iter().all(|&s| s);
        out.push(CheckItem::of(
            "conjugacy classes partition the lattice with orbit-stabilizer sizes",
            orbits_ok,
            || "class partition or orbit size broken".into(),
        ));

        let mut bounds_ok = true;
        for i in 0..lat.len() {
            for j in 0..lat.len() {
                let m = lat.meet(i, j);
                let jn = lat.join(i, j);
                bounds_ok &= lat.mask(m).is_subset(lat.mask(i))
                    && lat.mask(m).is_subset(lat.mask(j))
                    && lat.mask(i).is_subset(lat.mask(jn))
                    && lat.mask(j).is_subset(lat.mask(jn));
            }
        }
        out.push(CheckItem::of(
            "meet and join are lower and upper bounds",
            bounds_ok,
            || "a meet or join violates containment".into(),
        ));

        let mut subnormal_ok = true;
        let reach = lat.subnormal_in(lat.full_index());
        for i in 0..lat.len() {
            subnormal_ok &= reach.contains(i) == lat.is_subnormal_in_g(i);
            if lat.is_normal_in_g(i) && !lat.is_subnormal_in_g(i) {
                subnormal_ok = false;
            }
        }
        out.push(CheckItem::of(
            "subnormal-in-G flags agree with the reachability table",
            subnormal_ok,
            || "subnormality tables disagree".into(),
        ));

        let soluble =
            fitset_core::classes::class_member(&g, &ClassPredicate::Soluble)?;
        let sigma = g.sigma();
        let primes: Vec<u64> = sigma.iter().collect();
        let mut hall_ok = true;
        let mut hall_witness = String::new();
        for bits in 1u32..(1 << primes.len()) {
            let sub = PrimeSet::new(
                primes
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| bits >> k & 1 == 1)
                    .map(|(_, &p)| p),
            );
            let pi = Pi::In(sub.clone());
            let want = pi_part(g.order() as u64, &pi) as usize;
            let halls = lat.hall_subgroups(&pi);
            for &h in &halls {
                if lat.order(h) != want {
                    hall_ok = false;
                    hall_witness = format!("Hall {sub} candidate has order {}", lat.order(h));
                }
            }
            if soluble {
                if halls.is_empty() {
                    hall_ok = false;
                    hall_witness = format!("soluble group missing a Hall {sub}-subgroup");
                }
                let classes: Vec<usize> = halls.iter().map(|&h| lat.class_of(h)).collect();
                if classes.windows(2).any(|w| w[0] != w[1]) {
                    hall_ok = false;
                    hall_witness = format!("Hall {sub}-subgroups split into several classes");
                }
            }
        }
        out.push(CheckItem::with(
            "Hall subgroups have Hall orders; in soluble groups they exist and are conjugate",
            hall_ok,
            if hall_ok { format!("soluble = {soluble}") } else { hall_witness },
        ));

        Ok(out)
    });
    sink.add("lattice", report.map_err(Into::into));
}

/// Axioms plus the radical laws on every built set.
fn suite_fitting_axioms(ctx: &EntryContext, sink: &mut Sink) {
    let lat = &ctx.lattice;
    for (subject, f) in &ctx.sets {
        let report = TheoremReport::assemble("fitting-axioms", Vec::new(), || {
            let mut out = Vec::new();
            let verdict = fitting::verify_axioms(lat, f.members())?;
            out.push(CheckItem::of("axioms i-iii hold", verdict.passed(), || {
                format!("{verdict:?}")
            }));

            let rad = f.group_radical_index();
            let mut radical_ok = f.is_member(rad) && lat.is_normal_in_g(rad);
            for i in f.members().iter() {
                if lat.is_normal_in_g(i) && !lat.mask(i).is_subset(lat.mask(rad)) {
                    radical_ok = false;
                }
            }
            out.push(CheckItem::of(
                "the radical is the largest normal member",
                radical_ok,
                || format!("radical candidate #{rad} fails"),
            ));

            out.push(CheckItem::of(
                "every member radical is the member itself",
                f.members().iter().all(|i| f.radical_index_of(i) == i),
                || "a member differs from its own radical".into(),
            ));

            out.push(CheckItem::of(
                "sigma(F) lies inside sigma(G)",
                f.sigma().is_subset(&lat.group().sigma()),
                || format!("sigma(F) = {}", f.sigma()),
            ));
            Ok(out)
        });
        sink.add(subject.clone(), report);
        sink.add(subject.clone(), theorems::lemma_2_1_check(f));
        sink.add(subject.clone(), theorems::lemma_2_3_check(f));
        sink.add(subject.clone(), theorems::lemma_2_5_check(f));
    }
}

/// The product calculus: products with classes are Fitting sets, the
/// radical quotient law, associativity, monotonicity and the two
/// intersection distribution laws.
fn suite_products(ctx: &EntryContext, sink: &mut Sink) {
    let lat = &ctx.lattice;
    let g = lat.group().clone();
    if g.order() > PRODUCTS_ORDER_BOUND {
        sink.skip(
            "products",
            format!(
                "group order {} exceeds the products bound {PRODUCTS_ORDER_BOUND}",
                g.order()
            ),
        );
        return;
    }
    let classes = product_classes(&g.sigma());

    for (subject, f) in &ctx.sets {
        for h in &classes {
            let tag = format!("{subject} with {h}");
            let prod = match fitting::product_with_class(f, h) {
                Ok(p) => p,
                Err(e) => {
                    sink.skip(tag, e.to_string());
                    continue;
                }
            };

            sink.add(
                tag.clone(),
                TheoremReport::assemble("prop-3-1", Vec::new(), || {
                    let verdict = fitting::verify_axioms(lat, prod.members())?;
                    Ok(vec![CheckItem::of(
                        "the product family is a Fitting set",
                        verdict.passed(),
                        || format!("{verdict:?}"),
                    )])
                }),
            );

            sink.add(
                tag.clone(),
                TheoremReport::assemble("prop-3-2", Vec::new(), || {
                    let mut out = Vec::new();
                    out.push(CheckItem::of(
                        "the base set is contained in the product",
                        f.members().is_subset(prod.members()),
                        || {
                            let diff = f.members().difference(prod.members());
                            format!("lost members {:?}", diff.iter().collect::<Vec<_>>())
                        },
                    ));
                    let mut formula_ok = true;
                    let mut witness = String::new();
                    for i in 0..lat.len() {
                        let lifted = fitset_core::classes::section_class_radical(
                            &g,
                            lat.mask(i),
                            f.radical_mask_of(i),
                            h,
                        )?;
                        if &lifted != prod.radical_mask_of(i) {
                            formula_ok = false;
                            witness = format!(
                                "subgroup #{i}: lifted class radical has order {}, product radical order {}",
                                lifted.count(),
                                prod.radical_mask_of(i).count()
                            );
                            break;
                        }
                    }
                    out.push(CheckItem::with(
                        "the product radical over the base radical is the class radical of the quotient",
                        formula_ok,
                        if formula_ok { "checked on every subgroup".to_string() } else { witness },
                    ));
                    Ok(out)
                }),
            );
        }

        for m in &classes {
            for h in &classes {
                let tag = format!("{subject} with {m} then {h}");
                let res = TheoremReport::assemble("prop-3-3", Vec::new(), || {
                    let left = fitting::product_with_class(
                        &fitting::product_with_class(f, m)?,
                        h,
                    )?;
                    let right = fitting::product_with_class(
                        f,
                        &ClassPredicate::Product(Box::new(m.clone()), Box::new(h.clone())),
                    )?;
                    Ok(vec![CheckItem::of(
                        "stepwise product equals the class-product composition",
                        left.same_members(&right),
                        || {
                            format!(
                                "left has {} members, right {}",
                                left.member_count(),
                                right.member_count()
                            )
                        },
                    )])
                });
                sink.add(tag, res);

                let tag = format!("{subject} with {m} meet {h}");
                let res = TheoremReport::assemble("prop-3-4-3", Vec::new(), || {
                    let meet_class = fitting::product_with_class(
                        f,
                        &ClassPredicate::Intersection(Box::new(m.clone()), Box::new(h.clone())),
                    )?;
                    let both = fitting::product_with_class(f, m)?
                        .members()
                        .intersection(fitting::product_with_class(f, h)?.members());
                    Ok(vec![CheckItem::of(
                        "product with the class meet equals the meet of the products",
                        meet_class.members() == &both,
                        || {
                            format!(
                                "class-meet product has {} members, member meet {}",
                                meet_class.member_count(),
                                both.count()
                            )
                        },
                    )])
                });
                sink.add(tag, res);
            }
        }
    }

    // Set-level monotonicity and intersection distribution need set pairs.
    for (ai, (sa, fa)) in ctx.sets.iter().enumerate() {
        for (bi, (sb, fb)) in ctx.sets.iter().enumerate() {
            if ai == bi {
                continue;
            }
            let included = fa.members().is_subset(fb.members());
            if included {
                for m in &classes {
                    if !m.is_radical_homomorph() {
                        continue;
                    }
                    let tag = format!("{sa} inside {sb} with {m}");
                    let res = TheoremReport::assemble("prop-3-4-1", Vec::new(), || {
                        let pa = fitting::product_with_class(fa, m)?;
                        let pb = fitting::product_with_class(fb, m)?;
                        Ok(vec![CheckItem::of(
                            "products preserve containment of the base sets",
                            pa.members().is_subset(pb.members()),
                            || {
                                let diff = pa.members().difference(pb.members());
                                format!("indices {:?}", diff.iter().collect::<Vec<_>>())
                            },
                        )])
                    });
                    sink.add(tag, res);
                }
            }
            if ai < bi {
                for m in &classes {
                    if !(m.is_fitting() && m.is_formation()) {
                        continue;
                    }
                    let tag = format!("{sa} meet {sb} with {m}");
                    let res = TheoremReport::assemble("prop-3-4-2", Vec::new(), || {
                        let both = FittingSet::new(
                            lat,
                            fa.members().intersection(fb.members()),
                            "meet".into(),
                        )?;
                        let left = fitting::product_with_class(&both, m)?;
                        let right = fitting::product_with_class(fa, m)?
                            .members()
                            .intersection(fitting::product_with_class(fb, m)?.members());
                        Ok(vec![CheckItem::of(
                            "product distributes over the meet of the sets",
                            left.members() == &right,
                            || {
                                format!(
                                    "meet product has {} members, product meet {}",
                                    left.member_count(),
                                    right.count()
                                )
                            },
                        )])
                    });
                    sink.add(tag, res);
                }
            }
        }
    }
}

/// Semilocality: the equality criterion on every set, the three worked
/// characterizations, and the H-function laws.
fn suite_semilocal(ctx: &EntryContext, pi: &PrimeSet, sink: &mut Sink) {
    let lat = &ctx.lattice;
    for (subject, f) in &ctx.sets {
        sink.add(subject.clone(), theorems::lemma_4_2_check(f, pi));
    }
    sink.add("trivial h-function", theorems::example_4_1a_check(lat, pi));
    sink.add("p-group h-function", theorems::example_4_1b_check(lat, pi));
    if let Ok(nil) = fitting::trace(lat, &ClassPredicate::Nilpotent) {
        sink.add(
            "hall pullback of the nilpotent trace",
            theorems::example_4_1c_check(&nil, pi),
        );
    }

    match catalog_hfunction(lat, pi) {
        Ok(hf) => {
            sink.add("catalog h-function", theorems::lemma_4_3_check(&hf));
            sink.add("catalog h-function", theorems::prop_4_8_check(&hf));
            if let Ok(triv) = fitting::trace(lat, &ClassPredicate::Trivial) {
                sink.add(
                    "catalog h-function with the trivial set",
                    theorems::lemma_4_4_check(&hf, &triv),
                );
            }
            if let Ok(sol) = fitting::trace(lat, &ClassPredicate::SolublePi(Pi::In(pi.clone()))) {
                sink.add(
                    "catalog h-function with the soluble pi trace",
                    theorems::lemma_4_4_check(&hf, &sol),
                );
            }
        }
        Err(e) => sink.skip("catalog h-function", e.to_string()),
    }

    for (subject, hf) in &ctx.hfunctions {
        if hf.pi().is_subset(pi) && pi.is_subset(hf.pi()) {
            sink.add(subject.clone(), theorems::lemma_4_3_check(hf));
            sink.add(subject.clone(), theorems::prop_4_8_check(hf));
        }
    }
}

/// Existence and conjugacy of injectors, per theorem case.
fn suite_theorem_a(ctx: &EntryContext, case: u8, pi: &PrimeSet, sink: &mut Sink) {
    for (subject, f) in &ctx.sets {
        sink.add(subject.clone(), theorems::verify_theorem_a(f, case, pi));
        match case {
            1 => sink.add(subject.clone(), theorems::lemma_2_2_suite(f)),
            2 => sink.add(subject.clone(), theorems::lemma_2_4_check(f, pi)),
            _ => {}
        }
    }
}

/// The pullback description of injectors, plus its degenerations.
fn suite_theorem_b(ctx: &EntryContext, pi: &PrimeSet, sink: &mut Sink) {
    let lat = &ctx.lattice;
    let g = lat.group().clone();

    match catalog_hfunction(lat, pi) {
        Ok(hf) => sink.add("catalog h-function", theorems::verify_theorem_b(&hf)),
        Err(e) => sink.skip("catalog h-function", e.to_string()),
    }
    for (subject, hf) in &ctx.hfunctions {
        if hf.pi().is_subset(pi) && pi.is_subset(hf.pi()) {
            sink.add(subject.clone(), theorems::verify_theorem_b(hf));
        }
    }

    for p in pi.iter() {
        if g.order() as u64 % p == 0 {
            sink.add(
                format!("sylow degeneration at {p}"),
                theorems::sylow_degeneration_check(lat, p),
            );
        }
    }

    sink.add(
        "all-subgroup degeneration",
        TheoremReport::assemble("degeneration-trace-all", Vec::new(), || {
            let all = fitting::trace(lat, &ClassPredicate::All)?;
            let inj = injectors::injectors_brute(&all)?;
            Ok(vec![CheckItem::of(
                "the whole group is the unique injector of the full set",
                inj.injector_indices() == [lat.full_index()],
                || format!("found {} injectors", inj.len()),
            )])
        }),
    );

    if pi.intersection(&g.sigma()).is_empty() {
        sink.add(
            "disjoint pi degeneration",
            TheoremReport::assemble("degeneration-disjoint-pi", Vec::new(), || {
                let closed = fitting::trace(lat, &ClassPredicate::PiClosed(Pi::In(pi.clone())))?;
                let inj = injectors::injectors_brute(&closed)?;
                Ok(vec![CheckItem::of(
                    "with pi missing from the order, the group is its own injector",
                    inj.injector_indices() == [lat.full_index()],
                    || format!("found {} injectors", inj.len()),
                )])
            }),
        );
    }
}

fn suite_prop_5_6(ctx: &EntryContext, pi: &PrimeSet, sink: &mut Sink) {
    for (subject, f) in &ctx.sets {
        sink.add(subject.clone(), theorems::verify_prop_5_6(f, pi));
    }
}

/// The corollary family: centralizer constraints and one-class results.
fn suite_corollaries(ctx: &EntryContext, pi: &PrimeSet, k: u32, sink: &mut Sink) {
    let lat = &ctx.lattice;
    sink.add("pi-closed classes", theorems::corollary_4_5_check(lat, pi));
    sink.add("fitting subgroup", theorems::corollary_4_6_check(lat));
    for class in [
        ClassPredicate::PiClosed(Pi::In(pi.clone())),
        ClassPredicate::PiSpecial(Pi::In(pi.clone())),
    ] {
        sink.add(
            format!("absorbing class {class}"),
            theorems::corollary_5_1_check(lat, &class, pi),
        );
    }
    sink.add("pi-closed trace", theorems::corollary_5_2_check(lat, pi));
    sink.add("pi-special trace", theorems::corollary_5_3_check(lat, pi));
    for (subject, f) in &ctx.sets {
        sink.add(subject.clone(), theorems::corollary_5_4_check(f));
    }
    sink.add("pi-closed injectors", theorems::corollary_6_1_check(lat, pi));
    let mut ks = vec![0];
    if k != 0 {
        ks.push(k);
    }
    for kk in ks {
        sink.add(
            format!("pi-length bound {kk}"),
            theorems::corollary_6_2_check(lat, pi, kk),
        );
    }
}

/// Descriptive search for F-maximal subgroups over the radical that fail
/// to be injectors. Nothing is asserted about the outcome.
fn suite_counterexample_search(ctx: &EntryContext, sink: &mut Sink) {
    let lat = &ctx.lattice;
    for (subject, f) in &ctx.sets {
        let res = TheoremReport::assemble("counterexample-search", Vec::new(), || {
            let found = theorems::maximal_non_injectors(f)?;
            let witness = if found.is_empty() {
                "none found".to_string()
            } else {
                found
                    .iter()
                    .map(|&i| format!("subgroup #{i} (order {})", lat.order(i)))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            Ok(vec![CheckItem::with(
                "maximal members over the radical that are not injectors (descriptive)",
                true,
                witness,
            )])
        });
        sink.add(subject.clone(), res);
    }
}

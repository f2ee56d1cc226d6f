//! Acceptance gate. Runs every criterion against its time budget and prints
//! one PASS/FAIL line each; exits non-zero if any fails.
//!
//! `ELNITSKY_LONG=1` adds the S_6 spot checks to criterion 4.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use elnitsky::bott_samelson::{
    fixed_point_images, image_permutation, poincare, poincare_rhombic, q_factorial, Coloring, QPolynomial,
};
use elnitsky::flips::{apply_flip, flip_graph, flip_sites};
use elnitsky::io::geometry::PolygonGeometry;
use elnitsky::io::json;
use elnitsky::io::svg::{render_svg, RenderSpec};
use elnitsky::oracle::commutation_classes;
use elnitsky::tilings::{enumerate_rhombic, tiling_to_word, word_to_tiling};
use elnitsky::zonotopal::{enumerate_zonotopal, has_unique_max, poset, unique_max_patterns, ZonoTile, ZonoTiling};
use elnitsky::{LabelSet, Permutation, Word};

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn random_s5(count: usize) -> Vec<Permutation> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let mut seen = BTreeSet::new();
    while seen.len() < count {
        let mut v: Vec<usize> = (1..=5).collect();
        v.shuffle(&mut rng);
        seen.insert(Permutation::new(v).unwrap());
    }
    seen.into_iter().collect()
}

const WORD: &str = "3,4,2,5,6,5,3,4,3,2,1,5,2,3,6,4,5";
const WORD_SWAPPED: &str = "3,4,2,5,6,5,3,4,3,2,1,5,2,6,3,4,5";

fn word_round_trip() -> Check {
    let t = word_to_tiling(&Word::parse(WORD, Some(7)).unwrap()).map_err(|e| e.to_string())?;
    let u = word_to_tiling(&Word::parse(WORD_SWAPPED, Some(7)).unwrap()).map_err(|e| e.to_string())?;
    ensure(t.validate(), || "tiling is invalid".into())?;
    ensure(t.len() == 17, || format!("{} tiles", t.len()))?;
    ensure(*t.permutation() == p("7456312"), || format!("tiles E({})", t.permutation()))?;
    ensure(t == u, || "swapped word gives different tiles".into())
}

fn bijection() -> Check {
    for w in Permutation::all(4).chain(random_s5(20)) {
        let tilings = enumerate_rhombic(&w).map_err(|e| e.to_string())?;
        let classes = commutation_classes(&w).map_err(|e| e.to_string())?;
        ensure(tilings.len() == classes.len(), || {
            format!("{w}: {} tilings, {} classes", tilings.len(), classes.len())
        })?;
        for t in &tilings {
            let word = tiling_to_word(t).map_err(|e| e.to_string())?;
            ensure(word_to_tiling(&word).as_ref() == Ok(t), || format!("{w}: {word} does not round-trip"))?;
        }
        for c in &classes {
            let t = word_to_tiling(&c.representative).map_err(|e| e.to_string())?;
            ensure(tilings.contains(&t), || format!("{w}: class of {} missing", c.representative))?;
        }
    }
    Ok(())
}

fn flip_connectivity() -> Check {
    for w in Permutation::all(4).chain(Permutation::all(5)) {
        let g = flip_graph(&w).map_err(|e| e.to_string())?;
        ensure(g.is_connected(), || format!("flip graph of {w} is disconnected"))?;
        for t in g.nodes() {
            for f in flip_sites(t) {
                let u = apply_flip(t, &f).map_err(|e| e.to_string())?;
                ensure(t.tiles().difference(u.tiles()).count() == 3, || format!("{w}: flip changes wrong tiles"))?;
                ensure(apply_flip(&u, &f.flipped()).as_ref() == Ok(t), || format!("{w}: flip is not an involution"))?;
            }
        }
    }
    Ok(())
}

fn zonotopal_checks(w: &Permutation) -> Check {
    let err = |e: elnitsky::Error| e.to_string();
    let avoids = w.avoids_all(&unique_max_patterns()).map_err(err)?;
    ensure(has_unique_max(w).map_err(err)? == avoids, || format!("{w}: unique max disagrees with patterns"))?;
    let all = enumerate_zonotopal(w).map_err(err)?;
    let avoids_321 = w.rank() < 3 || !w.contains_pattern(&p("321")).map_err(err)?;
    ensure((all.len() == 1) == avoids_321, || format!("{w}: {} zonotopal tilings", all.len()))?;
    for z in &all {
        let weighted: usize = z.census().iter().map(|(k, t)| k * (k - 1) / 2 * t).sum();
        ensure(weighted == w.length(), || format!("{w}: census sums to {weighted}"))?;
    }
    let minimal: BTreeSet<ZonoTiling> = poset(w).map_err(err)?.minimal_elements().into_iter().cloned().collect();
    let rhombic: BTreeSet<ZonoTiling> = enumerate_rhombic(w).map_err(err)?.iter().map(ZonoTiling::from).collect();
    ensure(minimal == rhombic, || format!("{w}: minimal elements are not the rhombic tilings"))
}

fn zonotopal_theorems() -> Check {
    for w in Permutation::all(5) {
        zonotopal_checks(&w)?;
    }
    if std::env::var_os("ELNITSKY_LONG").is_some() {
        for w in Permutation::all(6).step_by(7) {
            zonotopal_checks(&w)?;
        }
    }
    Ok(())
}

/// One octagon, three hexagons and ten rhombi.
const OCTAGON_TILING: &str = r#"{"n":8,"w":[8,7,4,6,5,3,1,2],"tiles":[{"labels":[1,3],"base":[4]},{"labels":[1,4],"base":[]},{"labels":[1,5,8],"base":[3,4,6,7]},{"labels":[1,6],"base":[3,4,7]},{"labels":[1,7],"base":[3,4]},{"labels":[2,3,4],"base":[1]},{"labels":[2,5,6,7],"base":[1,3,4]},{"labels":[2,8],"base":[1,3,4,5,6,7]},{"labels":[3,5],"base":[4,6,7,8]},{"labels":[3,6,8],"base":[4,7]},{"labels":[3,7],"base":[4]},{"labels":[4,7],"base":[]},{"labels":[4,8],"base":[7]},{"labels":[7,8],"base":[]}]}"#;

fn length_histogram(n: usize) -> QPolynomial {
    let mut h = QPolynomial::zero();
    for v in Permutation::all(n) {
        h.add_assign_monomial(v.length(), 1);
    }
    h
}

fn poincare_data() -> Check {
    let z = json::parse_zonotopal(OCTAGON_TILING).map_err(|e| e.to_string())?;
    let census: Vec<(usize, usize)> = z.census().into_iter().collect();
    ensure(census == [(2, 10), (3, 3), (4, 1)], || format!("census {census:?}"))?;
    let q = |i| q_factorial(i).unwrap();
    let expected = &(&q(4) * &q(3).pow(3)) * &q(2).pow(10);
    let got = poincare(&z);
    ensure(got == expected, || format!("got {got}"))?;
    ensure(got.degree() == Some(25) && got.is_palindromic(), || "degree or symmetry".into())?;
    ensure(got.eval(1) == 5_308_416, || format!("value {}", got.eval(1)))?;

    for w in Permutation::all(4) {
        for t in enumerate_rhombic(&w).map_err(|e| e.to_string())? {
            ensure(poincare_rhombic(&t) == QPolynomial::q_integer(2).pow(w.length()), || format!("{w}"))?;
        }
    }
    for n in 1..=4 {
        // for n = 1 the polygon is degenerate and has no tiles
        let tiles = (n > 1).then(|| ZonoTile::new(LabelSet::prefix(n), LabelSet::EMPTY));
        let single = ZonoTiling::new(Permutation::longest(n), tiles).map_err(|e| e.to_string())?;
        let got = poincare(&single);
        ensure(got == length_histogram(n), || format!("n = {n}: {got}"))?;
        ensure(got == q(n), || format!("n = {n}: not [n]_q!"))?;
    }
    Ok(())
}

fn fixed_points() -> Check {
    let all: Vec<Permutation> = Permutation::all(4).collect();
    for w in &all {
        let interval: BTreeSet<Permutation> = all.iter().filter(|v| v.bruhat_leq(w).unwrap()).cloned().collect();
        for t in enumerate_rhombic(w).map_err(|e| e.to_string())? {
            let ell = t.len();
            let light = image_permutation(&t, &Coloring::all_light(ell)).map_err(|e| e.to_string())?;
            let dark = image_permutation(&t, &Coloring::all_dark(ell)).map_err(|e| e.to_string())?;
            ensure(light.is_identity(), || format!("{w}: all-light image {light}"))?;
            ensure(&dark == w, || format!("{w}: all-dark image {dark}"))?;
            let images = fixed_point_images(&t).map_err(|e| e.to_string())?;
            ensure(images == interval, || format!("{w}: images differ from Bruhat interval"))?;
            let mut count = QPolynomial::zero();
            for mask in 0..1u64 << ell {
                count.add_assign_monomial(Coloring::from_mask(mask, ell).dark_count(), 1);
            }
            ensure(count == poincare_rhombic(&t), || format!("{w}: coloring count {count}"))?;
        }
    }
    Ok(())
}

fn corners_sound(z: &ZonoTiling) -> bool {
    let g = PolygonGeometry::new(z.rank());
    z.tiles().iter().all(|tile| {
        let c: Vec<_> = tile.corners().into_iter().map(|s| g.vertex_position(s)).collect();
        let k = c.len();
        let sides: Vec<_> = (0..k).map(|i| c[(i + 1) % k].minus(c[i])).collect();
        let unit = sides.iter().all(|s| ((s.x * s.x + s.y * s.y).sqrt() - 1.0).abs() < 1e-9);
        let parallel = (0..k / 2).all(|i| {
            let (a, b) = (sides[i], sides[i + k / 2]);
            (a.x + b.x).abs() < 1e-9 && (a.y + b.y).abs() < 1e-9
        });
        unit && parallel
    })
}

fn io_round_trips() -> Check {
    for w in (1..=5).flat_map(Permutation::all) {
        for t in enumerate_rhombic(&w).map_err(|e| e.to_string())? {
            let s = json::rhombic_to_string(&t);
            let back = json::parse_rhombic(&s).map_err(|e| e.to_string())?;
            ensure(back == t && json::rhombic_to_string(&back) == s, || format!("{w}: {s}"))?;
        }
        for z in enumerate_zonotopal(&w).map_err(|e| e.to_string())? {
            let s = json::zonotopal_to_string(&z);
            let back = json::parse_zonotopal(&s).map_err(|e| e.to_string())?;
            ensure(back == z && json::zonotopal_to_string(&back) == s, || format!("{w}: {s}"))?;
            let svg = render_svg(&z, &RenderSpec::default()).map_err(|e| e.to_string())?;
            let doc = roxmltree::Document::parse(&svg).map_err(|e| format!("{w}: {e}"))?;
            let polygons = doc.descendants().filter(|n| n.has_tag_name("polygon")).count();
            ensure(polygons == z.len(), || format!("{w}: {polygons} polygons"))?;
            ensure(corners_sound(&z), || format!("{w}: tile corners are not unit parallelograms"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("word round-trip", Duration::from_millis(1), word_round_trip),
        ("bijection with commutation classes", Duration::from_secs(30), bijection),
        ("flip connectivity", Duration::from_secs(60), flip_connectivity),
        ("zonotopal theorems", Duration::from_secs(300), zonotopal_theorems),
        ("Poincare data", Duration::from_secs(1), poincare_data),
        ("fixed points", Duration::from_secs(60), fixed_points),
        ("I/O round-trips and rendering", Duration::from_secs(30), io_round_trips),
    ];
    let mut failed = 0;
    for (k, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= *budget) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over budget {budget:?})"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("{verdict} criterion {}: {name} [{elapsed:.2?}]", k + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Layered automorphisms of free groups: the outer action of partially
//! defined braids on a free group with some generators killed.
//!
//! An automorphism acts layer by layer.  Within a layer every generator of
//! the layer domain is sent to a conjugate of a generator of the layer
//! image, and generators outside the layer are treated as trivial.

use crate::braid::PMBraid;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::freeword::FreeWord;
use crate::partition::IntervalCuts;
use crate::report::Report;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::collections::BTreeSet;
use std::fmt;

/// One layer of a layered automorphism: a bijective assignment from domain
/// generators to conjugates of image generators, with everything outside
/// the image killed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutLayer {
    rank: usize,
    domain: Vec<usize>,
    image: Vec<usize>,
    targets: Vec<usize>,
    conjugators: Vec<FreeWord>,
}

fn check_point_set(rank: usize, points: &[usize], what: &str) -> Result<()> {
    if points.is_empty() {
        return Err(Error::InvalidAut(format!("empty layer {what}")));
    }
    for (k, &p) in points.iter().enumerate() {
        if p == 0 || p > rank {
            return Err(Error::OutOfRange(format!(
                "layer {what} point {p} is outside 1..={rank}"
            )));
        }
        if k > 0 && points[k - 1] >= p {
            return Err(Error::InvalidAut(format!(
                "layer {what} must be strictly increasing"
            )));
        }
    }
    Ok(())
}

impl AutLayer {
    /// Builds a layer from (target, conjugator) pairs aligned with the sorted
    /// domain.  Conjugators are killed down to the image support and stored
    /// in the unique shortest form.
    pub fn new(
        rank: usize,
        domain: Vec<usize>,
        image: Vec<usize>,
        assignment: Vec<(usize, FreeWord)>,
    ) -> Result<Self> {
        check_point_set(rank, &domain, "domain")?;
        check_point_set(rank, &image, "image")?;
        if domain.len() != image.len() || assignment.len() != domain.len() {
            return Err(Error::SizeMismatch(format!(
                "layer with {} domain points, {} image points, {} assignments",
                domain.len(),
                image.len(),
                assignment.len()
            )));
        }
        let mut seen_targets: Vec<usize> = assignment.iter().map(|(t, _)| *t).collect();
        seen_targets.sort_unstable();
        if seen_targets != image {
            return Err(Error::InvalidAut(
                "layer targets do not enumerate the layer image".into(),
            ));
        }
        let image_set: BTreeSet<usize> = image.iter().copied().collect();
        let dead: BTreeSet<usize> = (1..=rank).filter(|i| !image_set.contains(i)).collect();
        let mut targets = Vec::with_capacity(domain.len());
        let mut conjugators = Vec::with_capacity(domain.len());
        for (t, w) in assignment {
            if w.rank() != rank {
                return Err(Error::SizeMismatch(format!(
                    "conjugator of rank {} in a rank {rank} automorphism",
                    w.rank()
                )));
            }
            let value = FreeWord::generator(rank, t)?.conjugate_by(&w.kill(&dead))?;
            let (t2, c) = value.as_generator_conjugate().ok_or_else(|| {
                Error::Inconsistent("conjugated generator lost its shape".into())
            })?;
            targets.push(t2);
            conjugators.push(c);
        }
        Ok(AutLayer { rank, domain, image, targets, conjugators })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Image generator index for a domain generator.
    pub fn target(&self, i: usize) -> Option<usize> {
        let pos = self.domain.binary_search(&i).ok()?;
        Some(self.targets[pos])
    }

    /// Shortest conjugator for a domain generator.
    pub fn conjugator(&self, i: usize) -> Option<&FreeWord> {
        let pos = self.domain.binary_search(&i).ok()?;
        Some(&self.conjugators[pos])
    }

    /// Full image word of a domain generator.
    pub fn value(&self, i: usize) -> Option<FreeWord> {
        let pos = self.domain.binary_search(&i).ok()?;
        let g = FreeWord::generator(self.rank, self.targets[pos]).ok()?;
        g.conjugate_by(&self.conjugators[pos]).ok()
    }

    /// Applies the layer to a word; letters outside the layer domain are
    /// killed.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.rank {
            return Err(Error::SizeMismatch(format!(
                "word of rank {} under a rank {} layer",
                w.rank(),
                self.rank
            )));
        }
        let mut acc = FreeWord::empty(self.rank);
        for &l in w.letters() {
            let i = l.unsigned_abs() as usize;
            let Some(v) = self.value(i) else { continue };
            acc = if l > 0 { acc.concat(&v)? } else { acc.concat(&v.inverse())? };
        }
        Ok(acc)
    }
}

/// A layered automorphism: layers whose domains partition the generators
/// and whose images partition the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredAut {
    rank: usize,
    layers: Vec<AutLayer>,
}

impl LayeredAut {
    pub fn new(rank: usize, layers: Vec<AutLayer>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::OutOfRange("rank must be positive".into()));
        }
        let full: Vec<usize> = (1..=rank).collect();
        let mut domains = Vec::new();
        let mut images = Vec::new();
        for layer in &layers {
            if layer.rank != rank {
                return Err(Error::SizeMismatch(format!(
                    "rank {} layer in a rank {rank} automorphism",
                    layer.rank
                )));
            }
            domains.extend_from_slice(&layer.domain);
            images.extend_from_slice(&layer.image);
        }
        domains.sort_unstable();
        images.sort_unstable();
        if domains != full {
            return Err(Error::InvalidAut(
                "layer domains do not partition the generators".into(),
            ));
        }
        if images != full {
            return Err(Error::InvalidAut(
                "layer images do not partition the generators".into(),
            ));
        }
        Ok(LayeredAut { rank, layers })
    }

    pub fn identity(rank: usize) -> Result<Self> {
        let all: Vec<usize> = (1..=rank).collect();
        let assignment = all.iter().map(|&i| (i, FreeWord::empty(rank))).collect();
        let layer = AutLayer::new(rank, all.clone(), all, assignment)?;
        LayeredAut::new(rank, vec![layer])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn layers(&self) -> &[AutLayer] {
        &self.layers
    }

    /// Value of one generator, searched across layers.
    pub fn value(&self, i: usize) -> Option<FreeWord> {
        self.layers.iter().find_map(|l| l.value(i))
    }

    /// Applies the automorphism letter by letter.  Meaningful as a plain
    /// substitution only when a single layer covers everything, which is the
    /// case for automorphisms of honest braids.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.rank {
            return Err(Error::SizeMismatch(format!(
                "word of rank {} under a rank {} automorphism",
                w.rank(),
                self.rank
            )));
        }
        let mut acc = FreeWord::empty(self.rank);
        for &l in w.letters() {
            let i = l.unsigned_abs() as usize;
            let v = self
                .value(i)
                .ok_or_else(|| Error::Inconsistent(format!("no layer covers generator {i}")))?;
            acc = if l > 0 { acc.concat(&v)? } else { acc.concat(&v.inverse())? };
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> String {
        let layers: Vec<_> = self
            .layers
            .iter()
            .map(|l| {
                let assignment: Vec<_> = l
                    .domain
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| {
                        json!({
                            "i": i,
                            "t": l.targets[k],
                            "w": l.conjugators[k].to_string(),
                        })
                    })
                    .collect();
                json!({ "domain": l.domain, "image": l.image, "assignment": assignment })
            })
            .collect();
        serde_json::to_string_pretty(&json!({ "rank": self.rank, "layers": layers })).unwrap()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad json: {e}")))?;
        let rank = doc
            .get("rank")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::Parse("missing \"rank\"".into()))? as usize;
        let layers_doc = doc
            .get("layers")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("missing \"layers\" array".into()))?;
        let read_points = |v: &serde_json::Value, what: &str| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| Error::Parse(format!("\"{what}\" must be an array")))?
                .iter()
                .map(|x| {
                    x.as_u64()
                        .map(|u| u as usize)
                        .ok_or_else(|| Error::Parse(format!("bad \"{what}\" entry")))
                })
                .collect()
        };
        let mut layers = Vec::new();
        for ld in layers_doc {
            let domain = read_points(
                ld.get("domain").ok_or_else(|| Error::Parse("missing \"domain\"".into()))?,
                "domain",
            )?;
            let image = read_points(
                ld.get("image").ok_or_else(|| Error::Parse("missing \"image\"".into()))?,
                "image",
            )?;
            let entries = ld
                .get("assignment")
                .and_then(|v| v.as_array())
                .ok_or_else(|| Error::Parse("missing \"assignment\" array".into()))?;
            let mut by_index = Vec::new();
            for e in entries {
                let i = e
                    .get("i")
                    .and_then(|v| v.as_u64())
                    .ok_or_else(|| Error::Parse("assignment entry missing \"i\"".into()))?
                    as usize;
                let t = e
                    .get("t")
                    .and_then(|v| v.as_u64())
                    .ok_or_else(|| Error::Parse("assignment entry missing \"t\"".into()))?
                    as usize;
                let wtext = e
                    .get("w")
                    .and_then(|v| v.as_str())
                    .ok_or_else(|| Error::Parse("assignment entry missing \"w\"".into()))?;
                let w = if wtext.trim() == "1" {
                    FreeWord::empty(rank)
                } else {
                    FreeWord::parse(rank, wtext)?
                };
                by_index.push((i, (t, w)));
            }
            let assignment = domain
                .iter()
                .map(|&i| {
                    by_index
                        .iter()
                        .find(|(j, _)| *j == i)
                        .map(|(_, tw)| tw.clone())
                        .ok_or_else(|| {
                            Error::Parse(format!("no assignment for generator {i}"))
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            layers.push(AutLayer::new(rank, domain, image, assignment)?);
        }
        LayeredAut::new(rank, layers)
    }
}

impl fmt::Display for LayeredAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, layer) in self.layers.iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            for (pos, &i) in layer.domain.iter().enumerate() {
                if pos > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "u{i} -> {}", layer.value(i).unwrap())?;
            }
        }
        Ok(())
    }
}

/// Composite automorphism: f first, then g.  A result layer pairs an f
/// layer with the g layer its targets fall into; generators whose letters
/// leave the paired g domain are killed during substitution.
pub fn compose_layered(f: &LayeredAut, g: &LayeredAut) -> Result<LayeredAut> {
    if f.rank != g.rank {
        return Err(Error::SizeMismatch(format!(
            "composing automorphisms of rank {} and {}",
            f.rank, g.rank
        )));
    }
    let rank = f.rank;
    let mut layers = Vec::new();
    for gl in &g.layers {
        for fl in &f.layers {
            let mut domain = Vec::new();
            let mut assignment = Vec::new();
            for &a in &fl.domain {
                let mid = fl.target(a).unwrap();
                let Some(t2) = gl.target(mid) else { continue };
                let moved = gl.apply(fl.conjugator(a).unwrap())?;
                let c = gl.conjugator(mid).unwrap().concat(&moved)?;
                domain.push(a);
                assignment.push((t2, c));
            }
            if domain.is_empty() {
                continue;
            }
            let mut image: Vec<usize> = assignment.iter().map(|(t, _)| *t).collect();
            image.sort_unstable();
            layers.push(AutLayer::new(rank, domain, image, assignment)?);
        }
    }
    LayeredAut::new(rank, layers)
}

fn is_power_of(w: &FreeWord, m: usize) -> bool {
    w.letters().iter().all(|l| l.unsigned_abs() as usize == m)
}

/// Splits off the maximal trailing power of u_k: w = prefix * u_k^run.
fn split_tail_power(w: &FreeWord, k: usize) -> (FreeWord, i64) {
    let letters = w.letters();
    let mut cut = letters.len();
    let mut run = 0i64;
    while cut > 0 && letters[cut - 1].unsigned_abs() as usize == k {
        run += letters[cut - 1].signum() as i64;
        cut -= 1;
    }
    (FreeWord::new(w.rank(), letters[..cut].to_vec()).unwrap(), run)
}

/// Splits off the maximal leading power of u_k: w = u_k^run * suffix.
fn split_head_power(w: &FreeWord, k: usize) -> (i64, FreeWord) {
    let letters = w.letters();
    let mut cut = 0;
    let mut run = 0i64;
    while cut < letters.len() && letters[cut].unsigned_abs() as usize == k {
        run += letters[cut].signum() as i64;
        cut += 1;
    }
    (run, FreeWord::new(w.rank(), letters[cut..].to_vec()).unwrap())
}

enum ExponentSolution {
    Any,
    One(i64),
    NoSolution,
}

/// Solves p * u_k^e * q in <u_m> for the exponent e.  In a free group the
/// solution set is empty, a single exponent, or all of them.
fn solve_exponent(p: &FreeWord, k: usize, q: &FreeWord, m: usize) -> Result<ExponentSolution> {
    let (p1, a) = split_tail_power(p, k);
    let (b, q1) = split_head_power(q, k);
    if k == m && p1.is_empty() && q1.is_empty() {
        return Ok(ExponentSolution::Any);
    }
    let joined = p1.concat(&q1)?;
    if is_power_of(&joined, m) {
        Ok(ExponentSolution::One(-(a + b)))
    } else {
        Ok(ExponentSolution::NoSolution)
    }
}

fn u_power(rank: usize, k: usize, e: i64) -> Result<FreeWord> {
    let letter = if e >= 0 { k as i32 } else { -(k as i32) };
    FreeWord::new(rank, vec![letter; e.unsigned_abs() as usize])
}

/// Whether f and g have the same layer structure and differ layerwise by a
/// single conjugation on the image generators.
///
/// Every layer value is a conjugate of a generator, so a common conjugator
/// c must lie in the intersection of the cosets conj_f(i)^-1 <u_t(i)>
/// conj_g(i).  Parametrizing c by the first coset pins the exponent and the
/// remaining generators verify the choice.
pub fn equivalent(f: &LayeredAut, g: &LayeredAut) -> Result<bool> {
    if f.rank != g.rank || f.layers.len() != g.layers.len() {
        return Ok(false);
    }
    for (fl, gl) in f.layers.iter().zip(&g.layers) {
        if fl.domain != gl.domain || fl.image != gl.image || fl.targets != gl.targets {
            return Ok(false);
        }
        let k0 = fl.targets[0];
        let a1 = &fl.conjugators[0];
        let b1 = &gl.conjugators[0];
        let mut pinned: Option<i64> = None;
        let mut feasible = true;
        for idx in 1..fl.targets.len() {
            let p = fl.conjugators[idx].concat(&a1.inverse())?;
            let q = b1.concat(&gl.conjugators[idx].inverse())?;
            match solve_exponent(&p, k0, &q, fl.targets[idx])? {
                ExponentSolution::Any => {}
                ExponentSolution::One(e) => match pinned {
                    None => pinned = Some(e),
                    Some(prev) if prev == e => {}
                    Some(_) => {
                        feasible = false;
                        break;
                    }
                },
                ExponentSolution::NoSolution => {
                    feasible = false;
                    break;
                }
            }
        }
        if !feasible {
            return Ok(false);
        }
        let e = pinned.unwrap_or(0);
        let c = a1.inverse().concat(&u_power(f.rank, k0, e)?)?.concat(b1)?;
        for &i in &fl.domain {
            let lhs = fl.value(i).unwrap().conjugate_by(&c)?;
            if lhs != gl.value(i).unwrap() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Image of one local generator under one crossing at positions r, r+1 on
/// k strands.  The faithful rule conjugates; the corrupted rule drops the
/// conjugation on positive crossings and is kept only as a negative
/// control for the verification suite.
fn crossing_image(k: usize, r: usize, positive: bool, faithful: bool, i: usize) -> Result<FreeWord> {
    let ri = r as i32;
    let letters: Vec<i32> = if positive {
        if i == r {
            if faithful {
                vec![ri, ri + 1, -ri]
            } else {
                vec![ri + 1]
            }
        } else if i == r + 1 {
            vec![ri]
        } else {
            vec![i as i32]
        }
    } else if i == r {
        vec![ri + 1]
    } else if i == r + 1 {
        vec![-(ri + 1), ri, ri + 1]
    } else {
        vec![i as i32]
    };
    FreeWord::new(k, letters)
}

fn artin_with_rule(x: &PMBraid, faithful: bool) -> Result<LayeredAut> {
    let n = x.n();
    let mut layers = Vec::new();
    for pl in x.layers() {
        let k = pl.top().len();
        let word = pl.normal_form().to_word();
        let mut vals: Vec<FreeWord> =
            (1..=k).map(|i| FreeWord::generator(k, i)).collect::<Result<_>>()?;
        for &l in word.letters() {
            let r = l.unsigned_abs() as usize;
            let positive = l > 0;
            vals = vals
                .iter()
                .map(|v| v.substitute(|i| crossing_image(k, r, positive, faithful, i)))
                .collect::<Result<_>>()?;
        }
        let mut assignment = Vec::with_capacity(k);
        for v in &vals {
            let ambient: Vec<i32> = v
                .letters()
                .iter()
                .map(|&m| {
                    let b = pl.bottom()[m.unsigned_abs() as usize - 1] as i32;
                    if m > 0 {
                        b
                    } else {
                        -b
                    }
                })
                .collect();
            let value = FreeWord::new(n, ambient)?;
            let (t, c) = value.as_generator_conjugate().ok_or_else(|| {
                Error::Inconsistent("crossing image is not a generator conjugate".into())
            })?;
            assignment.push((t, c));
        }
        layers.push(AutLayer::new(n, pl.top().to_vec(), pl.bottom().to_vec(), assignment)?);
    }
    LayeredAut::new(n, layers)
}

/// The layered automorphism induced by a partially defined braid.  Each
/// positive crossing at positions r, r+1 sends u_r to u_r u_{r+1} u_r^-1
/// and u_{r+1} to u_r; crossings act in word order and the result is
/// relabeled along the layer interfaces.
pub fn artin_action(x: &PMBraid) -> Result<LayeredAut> {
    artin_with_rule(x, true)
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> Result<PMBraid> {
    let len = rng.gen_range(0..=6usize);
    let mut el = PMBraid::identity(n)?;
    for _ in 0..len {
        let g = if n >= 2 && rng.gen_bool(0.75) {
            PMBraid::generator_s(rng.gen_range(1..n), n, rng.gen_bool(0.5))?
        } else {
            let cuts: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.3)).collect();
            PMBraid::generator_e(&IntervalCuts::new(n, cuts)?)?
        };
        el = el.product(&g)?;
    }
    Ok(el)
}

fn verify_homomorphism_with<F>(n: usize, config: &Config, suite: &str, action: F) -> Result<Report>
where
    F: Fn(&PMBraid) -> Result<LayeredAut>,
{
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut report = Report::new(suite);
    for _ in 0..config.samples {
        let x = random_element(&mut rng, n)?;
        let y = random_element(&mut rng, n)?;
        let xy = x.product(&y)?;
        let lhs = action(&xy)?;
        let rhs = compose_layered(&action(&x)?, &action(&y)?)?;
        report.checked += 1;
        if !equivalent(&lhs, &rhs)? {
            report.record(
                "outer-action-product",
                format!("x={x} y={y}"),
                "action of the product differs from the composed actions",
            );
        }
    }
    Ok(report)
}

/// Randomized check that the braid action on layered automorphisms is a
/// monoid homomorphism up to layerwise conjugation.
pub fn verify_outer_action_homomorphism(n: usize, config: &Config) -> Result<Report> {
    verify_homomorphism_with(n, config, "outer-action", artin_action)
}

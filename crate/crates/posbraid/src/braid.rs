//! Positive braid words: parsing, closure combinatorics, normalization moves,
//! subword search, and the two-column index reduction.

use std::fmt;

use serde::Serialize;

use crate::Error;

/// One syllable `s<generator>^<exponent>` of a positive braid word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Syllable {
    pub generator: usize,
    pub exponent: usize,
}

/// A positive braid word on `strands` strands, stored as syllables with
/// adjacent syllables on distinct generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    syllables: Vec<Syllable>,
}

impl BraidWord {
    pub fn new(strands: usize, syllables: Vec<(usize, usize)>) -> Result<Self, Error> {
        if strands < 2 {
            return Err(Error::Parse("a braid needs at least 2 strands".into()));
        }
        if syllables.is_empty() {
            return Err(Error::Parse("empty braid word".into()));
        }
        let mut merged: Vec<Syllable> = Vec::with_capacity(syllables.len());
        for (generator, exponent) in syllables {
            if generator == 0 {
                return Err(Error::Parse("generator index 0".into()));
            }
            if exponent == 0 {
                return Err(Error::Parse("exponent 0".into()));
            }
            if generator >= strands {
                return Err(Error::Parse(format!(
                    "generator index {generator} needs at least {} strands, declared {strands}",
                    generator + 1
                )));
            }
            match merged.last_mut() {
                Some(last) if last.generator == generator => last.exponent += exponent,
                _ => merged.push(Syllable { generator, exponent }),
            }
        }
        Ok(BraidWord { strands, syllables: merged })
    }

    pub fn from_letters(strands: usize, letters: &[usize]) -> Result<Self, Error> {
        BraidWord::new(strands, letters.iter().map(|&g| (g, 1)).collect())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Crossing count: the sum of all exponents.
    pub fn crossings(&self) -> usize {
        self.syllables.iter().map(|s| s.exponent).sum()
    }

    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.crossings());
        for s in &self.syllables {
            out.extend(std::iter::repeat_n(s.generator, s.exponent));
        }
        out
    }

    /// Number of occurrences of each generator, indexed `1..strands`.
    pub fn occurrence_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.strands];
        for s in &self.syllables {
            counts[s.generator] += s.exponent;
        }
        counts
    }

    /// `true` when every generator `1..strands-1` occurs at least `min` times.
    pub fn all_generators_at_least(&self, min: usize) -> bool {
        self.occurrence_counts()[1..].iter().all(|&c| c >= min)
    }

    /// Moves the first `k` letters to the end of the word.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let letters = self.letters();
        let c = letters.len();
        let k = k % c;
        let mut rotated = Vec::with_capacity(c);
        rotated.extend_from_slice(&letters[k..]);
        rotated.extend_from_slice(&letters[..k]);
        BraidWord::from_letters(self.strands, &rotated).expect("rotation stays valid")
    }

    pub fn reverse(&self) -> BraidWord {
        let mut letters = self.letters();
        letters.reverse();
        BraidWord::from_letters(self.strands, &letters).expect("reversal stays valid")
    }

    /// Maps every generator `s_i` to `s_(n-i)`.
    pub fn flip_indices(&self) -> BraidWord {
        let n = self.strands;
        let letters: Vec<usize> = self.letters().iter().map(|&g| n - g).collect();
        BraidWord::from_letters(n, &letters).expect("index flip stays valid")
    }

    pub fn closure_permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        for g in self.letters() {
            images.swap(g - 1, g);
        }
        Permutation { images }
    }

    pub fn component_count(&self) -> usize {
        self.closure_permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_gen = self.syllables.iter().map(|s| s.generator).max().unwrap_or(0);
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if s.exponent == 1 {
                write!(f, "s{}", s.generator)?;
            } else {
                write!(f, "s{}^{}", s.generator, s.exponent)?;
            }
        }
        if self.strands != max_gen + 1 {
            write!(f, " @{}", self.strands)?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses the braid grammar: whitespace-separated syllables `s<i>` or
/// `s<i>^<k>` (`σ` accepted for `s`), optional trailing `@<n>` strand
/// override; alternatively a compact digit string, one letter per digit 1-9.
pub fn parse_braid(text: &str) -> Result<BraidWord, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty braid word".into()));
    }
    let (body, declared) = match text.rsplit_once('@') {
        Some((body, n)) => {
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad strand count '@{}'", n.trim())))?;
            (body.trim(), Some(n))
        }
        None => (text, None),
    };
    if body.is_empty() {
        return Err(Error::Parse("empty braid word".into()));
    }

    let mut syllables: Vec<(usize, usize)> = Vec::new();
    if body.chars().all(|c| c.is_ascii_digit()) {
        for ch in body.chars() {
            let g = ch.to_digit(10).unwrap() as usize;
            if g == 0 {
                return Err(Error::Parse("generator index 0".into()));
            }
            syllables.push((g, 1));
        }
    } else {
        for token in body.split_whitespace() {
            let rest = token
                .strip_prefix('s')
                .or_else(|| token.strip_prefix("σ"))
                .ok_or_else(|| Error::Parse(format!("malformed token '{token}'")))?;
            let (gen_str, exp_str) = match rest.split_once('^') {
                Some((g, e)) => (g, Some(e)),
                None => (rest, None),
            };
            let generator: usize =
                gen_str.parse().map_err(|_| Error::Parse(format!("malformed token '{token}'")))?;
            let exponent: usize = match exp_str {
                Some(e) => {
                    e.parse().map_err(|_| Error::Parse(format!("malformed token '{token}'")))?
                }
                None => 1,
            };
            if generator == 0 {
                return Err(Error::Parse("generator index 0".into()));
            }
            if exponent == 0 {
                return Err(Error::Parse("exponent 0".into()));
            }
            syllables.push((generator, exponent));
        }
    }
    let max_gen = syllables.iter().map(|&(g, _)| g).max().unwrap();
    let strands = match declared {
        Some(n) => {
            if max_gen >= n {
                return Err(Error::Parse(format!(
                    "generator index {max_gen} not allowed on {n} strands"
                )));
            }
            n
        }
        None => max_gen + 1,
    };
    BraidWord::new(strands, syllables)
}

/// A bijection of `{1..n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (0-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

/// Options for `contains_subword`.
#[derive(Clone, Copy, Debug)]
pub struct SubwordOpts {
    pub cyclic: bool,
    pub reversal: bool,
    pub index_shift: bool,
}

impl SubwordOpts {
    pub fn all() -> Self {
        SubwordOpts { cyclic: true, reversal: true, index_shift: true }
    }

    pub fn none() -> Self {
        SubwordOpts { cyclic: false, reversal: false, index_shift: false }
    }
}

/// Witness that a pattern word occurs inside a transformed host word.
///
/// The transform is applied to the host: optional reversal, then rotation by
/// `rotation` letters; pattern generators are matched against host generators
/// minus `shift`. `positions` are strictly increasing letter indices into the
/// transformed host whose letters spell the pattern.
#[derive(Clone, Debug, Serialize)]
pub struct SubwordWitness {
    pub reversed: bool,
    pub rotation: usize,
    pub shift: i64,
    pub positions: Vec<usize>,
}

impl SubwordWitness {
    /// Re-runs the check this witness claims.
    pub fn verify(&self, host: &BraidWord, pattern: &BraidWord) -> bool {
        let transformed = if self.reversed { host.reverse() } else { host.clone() };
        let transformed = transformed.rotate(self.rotation);
        let host_letters = transformed.letters();
        let pattern_letters = pattern.letters();
        if self.positions.len() != pattern_letters.len() {
            return false;
        }
        let mut prev: Option<usize> = None;
        for (&pos, &pg) in self.positions.iter().zip(&pattern_letters) {
            if prev.is_some_and(|p| pos <= p) {
                return false;
            }
            prev = Some(pos);
            let Some(&hg) = host_letters.get(pos) else { return false };
            if hg as i64 != pg as i64 + self.shift {
                return false;
            }
        }
        true
    }
}

/// Searches for `pattern` as a subword of `host`: a letter subsequence that
/// spells the pattern, up to the transforms enabled in `opts` (cyclic
/// rotation, reversal, uniform index shift).
pub fn contains_subword(
    host: &BraidWord,
    pattern: &BraidWord,
    opts: SubwordOpts,
) -> Option<SubwordWitness> {
    assert!(!pattern.syllables().is_empty(), "pattern must be nonempty");
    let pattern_letters = pattern.letters();
    let p_min = *pattern_letters.iter().min().unwrap() as i64;
    let p_max = *pattern_letters.iter().max().unwrap() as i64;
    let host_max = (host.strands - 1) as i64;

    let shifts: Vec<i64> = if opts.index_shift {
        ((1 - p_min)..=(host_max - p_max)).collect()
    } else if p_max <= host_max {
        vec![0]
    } else {
        return None;
    };
    let reversals: &[bool] = if opts.reversal { &[false, true] } else { &[false] };
    let c = host.crossings();
    let rotations: Vec<usize> = if opts.cyclic { (0..c).collect() } else { vec![0] };

    for &reversed in reversals {
        let base = if reversed { host.reverse() } else { host.clone() };
        let base_letters = base.letters();
        for &rotation in &rotations {
            for &shift in &shifts {
                let mut positions = Vec::with_capacity(pattern_letters.len());
                let mut pi = 0usize;
                for (idx, _) in base_letters.iter().enumerate() {
                    if pi == pattern_letters.len() {
                        break;
                    }
                    let hg = base_letters[(idx + rotation) % c];
                    if hg as i64 == pattern_letters[pi] as i64 + shift {
                        positions.push(idx);
                        pi += 1;
                    }
                }
                if pi == pattern_letters.len() {
                    return Some(SubwordWitness { reversed, rotation, shift, positions });
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Commutation traces and the push-right normal form.
// ---------------------------------------------------------------------------

/// Strict dependence order of the word's letters: `less[a][b]` iff letter `a`
/// must stay before letter `b` under far-commutation moves (|i-j| >= 2).
fn dependence_order(letters: &[usize]) -> Vec<Vec<bool>> {
    let c = letters.len();
    let mut less = vec![vec![false; c]; c];
    for a in (0..c).rev() {
        for b in a + 1..c {
            less[a][b] = letters[a].abs_diff(letters[b]) <= 1
                || (a + 1..b).any(|m| less[a][m] && less[m][b]);
        }
    }
    less
}

/// Finds positions `p1 < p2 < p3` with letters `(i, i+1, i)` such that the
/// three can be made adjacent by far-commutations, i.e. the open dependence
/// interval `(p1, p3)` contains only `p2`.
fn find_braid_relation_triple(letters: &[usize]) -> Option<(usize, usize, usize)> {
    let c = letters.len();
    let less = dependence_order(letters);
    for p2 in 0..c {
        let g = letters[p2];
        if g < 2 {
            continue;
        }
        let i = g - 1; // look for (i, i+1, i) around this i+1 letter
        for p1 in (0..p2).rev() {
            if letters[p1] != i || !less[p1][p2] {
                continue;
            }
            for p3 in p2 + 1..c {
                if letters[p3] != i || !less[p2][p3] {
                    continue;
                }
                let blocked =
                    (0..c).any(|x| x != p1 && x != p2 && x != p3 && less[p1][x] && less[x][p3]);
                if !blocked {
                    return Some((p1, p2, p3));
                }
                break; // farther p3 only enlarges the interval
            }
        }
    }
    None
}

/// Rewrites the word so the letters at the triple become an adjacent factor
/// `s_i s_(i+1) s_i`, then applies the braid relation, yielding
/// `s_(i+1) s_i s_(i+1)`.
fn apply_braid_relation(letters: &[usize], triple: (usize, usize, usize)) -> Vec<usize> {
    let (p1, p2, p3) = triple;
    let i = letters[p1];
    let less = dependence_order(letters);
    let mut out = Vec::with_capacity(letters.len());
    for (x, &g) in letters.iter().enumerate() {
        if x != p1 && x != p2 && x != p3 && less[x][p3] {
            out.push(g);
        }
    }
    out.extend_from_slice(&[i + 1, i, i + 1]);
    for (x, &g) in letters.iter().enumerate() {
        if x != p1 && x != p2 && x != p3 && !less[x][p3] {
            out.push(g);
        }
    }
    out
}

/// Applies braid relations `s_i s_(i+1) s_i -> s_(i+1) s_i s_(i+1)` until no
/// such factor can be exposed by far-commutations and cyclic rotation.
///
/// Each rewrite strictly increases the sum of generator indices, which is
/// bounded by `crossings * (strands - 1)`, so this terminates. Rewrites are
/// applied deterministically: smallest rotation offset first, then the
/// first exposable triple in position order.
pub fn push_right_normal_form(w: &BraidWord) -> BraidWord {
    let mut letters = w.letters();
    let c = letters.len();
    let bound = c * (w.strands - 1) + 1;
    for _ in 0..bound {
        let mut rewritten = false;
        for rot in 0..c {
            let view: Vec<usize> = (0..c).map(|j| letters[(j + rot) % c]).collect();
            if let Some(triple) = find_braid_relation_triple(&view) {
                letters = apply_braid_relation(&view, triple);
                rewritten = true;
                break;
            }
        }
        if !rewritten {
            return BraidWord::from_letters(w.strands, &letters).expect("rewrites stay valid");
        }
    }
    unreachable!("push-right rewriting exceeded its termination bound");
}

// ---------------------------------------------------------------------------
// Two-column index reduction.
// ---------------------------------------------------------------------------

/// Result of the two-column index reduction attempt.
#[derive(Clone, Debug)]
pub enum Lemma5Outcome {
    /// A word on one fewer strand with identical invariants.
    Reduced(BraidWord),
    /// No column pair admits the reduction.
    NotApplicable,
    /// A merge candidate was constructed but failed the mandatory invariant
    /// post-check. This indicates a construction bug and is surfaced rather
    /// than silently dropped.
    PostCheckFailed { candidate: BraidWord },
}

/// Best-effort strand-count reduction: if for some `i` the linking pattern of
/// the subword induced by generators `i, i+1` is a path, try to normalize the
/// word (rotation, reversal, far-commutations) so that the induced subword is
/// `s_i^k s_(i+1) s_i s_(i+1)^l`, then merge the two columns into one and
/// decrease all higher generator indices by one.
///
/// The merge is validated post hoc: genus, signature, Alexander polynomial
/// and component count of input and output must agree.
pub fn reduce_index_lemma5(w: &BraidWord) -> Option<BraidWord> {
    match reduce_index_lemma5_outcome(w) {
        Lemma5Outcome::Reduced(r) => Some(r),
        _ => None,
    }
}

pub fn reduce_index_lemma5_outcome(w: &BraidWord) -> Lemma5Outcome {
    if w.strands < 3 {
        return Lemma5Outcome::NotApplicable;
    }
    let counts = w.occurrence_counts();
    if counts[1..].contains(&0) {
        return Lemma5Outcome::NotApplicable;
    }
    let mut failed: Option<BraidWord> = None;
    for i in 1..w.strands - 1 {
        let Ok(two_col) = crate::pattern::induced_two_column_pattern(w, i) else {
            continue;
        };
        if !two_col.is_path() {
            continue;
        }
        for reversed in [false, true] {
            let base = if reversed { w.reverse() } else { w.clone() };
            let c = base.crossings();
            for rot in 0..c {
                let candidate = try_merge(&base.rotate(rot), i);
                if let Some(merged) = candidate {
                    if reduction_preserves_invariants(w, &merged) {
                        return Lemma5Outcome::Reduced(merged);
                    }
                    failed = Some(merged);
                }
            }
        }
    }
    match failed {
        Some(candidate) => Lemma5Outcome::PostCheckFailed { candidate },
        None => Lemma5Outcome::NotApplicable,
    }
}

/// Attempts the column merge on the word as written: the subword induced by
/// `{i, i+1}` must be exactly `s_i^k s_(i+1) s_i s_(i+1)^l` with `k, l >= 1`,
/// lower-index letters must be movable before the last `s_i`, higher-index
/// letters after the first `s_(i+1)`.
fn try_merge(w: &BraidWord, i: usize) -> Option<BraidWord> {
    let letters = w.letters();
    let induced: Vec<usize> =
        (0..letters.len()).filter(|&p| letters[p] == i || letters[p] == i + 1).collect();
    // Shape check: i^k, then one i+1, one i, then (i+1)^l.
    let total = induced.len();
    if total < 4 {
        return None;
    }
    let k = induced.iter().take_while(|&&p| letters[p] == i).count();
    if k == 0 || k + 2 >= total {
        return None;
    }
    let t_first = induced[k];
    let t_last = induced[k + 1];
    if letters[t_first] != i + 1 || letters[t_last] != i {
        return None;
    }
    if induced[k + 2..].iter().any(|&p| letters[p] != i + 1) {
        return None;
    }

    let less = dependence_order(&letters);
    // Low-index letters must fit before the lone s_(i+1); high-index letters
    // after the lone s_i.
    for (p, &g) in letters.iter().enumerate() {
        if g < i && less[t_first][p] {
            return None;
        }
        if g > i + 1 && less[p][t_last] {
            return None;
        }
    }

    // Merged word: [letters of generators <= i, in order, without the lone
    // s_(i+1)] ++ [s_i] ++ [letters of generators >= i+1 after the shape
    // boundary, indices decreased by one].
    let mut merged: Vec<usize> = Vec::with_capacity(letters.len() - 1);
    for (p, &g) in letters.iter().enumerate() {
        if g < i || (g == i && p != t_last) {
            merged.push(g);
        }
    }
    merged.push(i);
    for (p, &g) in letters.iter().enumerate() {
        if g > i + 1 || (g == i + 1 && p != t_first) {
            merged.push(g - 1);
        }
    }
    BraidWord::from_letters(w.strands - 1, &merged).ok()
}

fn reduction_preserves_invariants(before: &BraidWord, after: &BraidWord) -> bool {
    if before.component_count() != after.component_count() {
        return false;
    }
    let (Ok(a), Ok(b)) = (crate::seifert::invariants(before), crate::seifert::invariants(after))
    else {
        return false;
    };
    a.genus == b.genus && a.signature == b.signature && a.alexander.equal_up_to_unit(&b.alexander)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let w = parse_braid("s1^4 s2 s1^3 s2^2").unwrap();
        assert_eq!(w.strands(), 3);
        assert_eq!(
            w.syllables(),
            &[
                Syllable { generator: 1, exponent: 4 },
                Syllable { generator: 2, exponent: 1 },
                Syllable { generator: 1, exponent: 3 },
                Syllable { generator: 2, exponent: 2 },
            ]
        );
        let t = parse_braid("111").unwrap();
        assert_eq!(t.strands(), 2);
        assert_eq!(t.syllables(), &[Syllable { generator: 1, exponent: 3 }]);
        let s = parse_braid("s3^2").unwrap();
        assert_eq!(s.strands(), 4);
        assert_eq!(s.syllables(), &[Syllable { generator: 3, exponent: 2 }]);
        // Unicode alias and strand override.
        let u = parse_braid("σ1^2 σ2 @4").unwrap();
        assert_eq!(u.strands(), 4);
        assert_eq!(u.to_string(), "s1^2 s2 @4");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_braid("s0^2").is_err());
        assert!(parse_braid("s1^0").is_err());
        assert!(parse_braid("s3 @3").is_err());
        assert!(parse_braid("x1").is_err());
        assert!(parse_braid("").is_err());
    }

    #[test]
    fn display_round_trip() {
        for text in ["s1^4 s2 s1^3 s2^2", "s1^3", "s2^2 @4"] {
            let w = parse_braid(text).unwrap();
            assert_eq!(parse_braid(&w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn closure_permutations() {
        // Three transpositions (1 2) compose to (1 2): one cycle -> knot.
        let trefoil = parse_braid("s1^3").unwrap();
        assert_eq!(trefoil.component_count(), 1);
        assert!(trefoil.is_knot());
        // Hand-composed: the closure permutation of s1^5 s2 s1^4 s2 swaps the
        // first two strands and fixes the third: 2 components.
        let t = parse_braid("s1^5 s2 s1^4 s2").unwrap();
        assert_eq!(t.component_count(), 2);
        // s1 s2 on 3 strands is a 3-cycle: unknot.
        let u = parse_braid("s1 s2").unwrap();
        assert_eq!(u.component_count(), 1);
        // Hopf link.
        assert_eq!(parse_braid("s1^2").unwrap().component_count(), 2);
        // 3-component example.
        let x = parse_braid("s1^2 s2^2 s1 s3 s2^2 s3").unwrap();
        assert_eq!(x.component_count(), 3);
    }

    #[test]
    fn word_transforms() {
        let w = parse_braid("s1 s2^2").unwrap();
        assert_eq!(w.rotate(1), parse_braid("s2^2 s1").unwrap());
        assert_eq!(parse_braid("s1^4 s2").unwrap().reverse(), parse_braid("s2 s1^4").unwrap());
        assert_eq!(parse_braid("s1^2 s2").unwrap().flip_indices(), parse_braid("s2^2 s1").unwrap());
        // Rotation through a syllable re-coalesces.
        assert_eq!(parse_braid("s1^4").unwrap().rotate(2), parse_braid("s1^4").unwrap());
    }

    #[test]
    fn closure_invariance_under_transforms() {
        for text in ["s1^3 s2^2", "s1 s2 s3 s1 s2 s3", "s1^2 s2^3 s1^2 s2^2"] {
            let w = parse_braid(text).unwrap();
            let b = w.component_count();
            for k in 0..w.crossings() {
                assert_eq!(w.rotate(k).component_count(), b);
            }
            assert_eq!(w.reverse().component_count(), b);
            assert_eq!(w.flip_indices().component_count(), b);
        }
    }

    #[test]
    fn push_right_examples() {
        let w = parse_braid("s1 s2 s1").unwrap();
        assert_eq!(push_right_normal_form(&w), parse_braid("s2 s1 s2").unwrap());
        let fixed = parse_braid("s2 s1 s2").unwrap();
        assert_eq!(push_right_normal_form(&fixed), fixed);
        // s1 s3 s2 s1: the far commutation s1 s3 = s3 s1 exposes s1 s2 s1,
        // whose rewrite exposes s2 s3 s2 in turn; the fixpoint is reached
        // after two pushes.
        let v = parse_braid("s1 s3 s2 s1").unwrap();
        let n = push_right_normal_form(&v);
        let before: usize = v.letters().iter().sum();
        let after: usize = n.letters().iter().sum();
        assert_eq!(after, before + 2);
        assert_eq!(n.component_count(), v.component_count());
        let a = crate::seifert::invariants(&v);
        let b = crate::seifert::invariants(&n);
        // Both sides fail the occurrence precondition here, so compare what
        // is defined for any word.
        assert!(a.is_err() && b.is_err());
        assert_eq!(v.crossings(), n.crossings());
    }

    #[test]
    fn push_right_increases_index_sum() {
        let w = parse_braid("s1 s2 s1 s2 s1 s2").unwrap();
        let n = push_right_normal_form(&w);
        let sum_before: usize = w.letters().iter().sum();
        let sum_after: usize = n.letters().iter().sum();
        assert!(sum_after >= sum_before);
        assert_eq!(n.crossings(), w.crossings());
    }

    #[test]
    fn subword_examples() {
        let host = parse_braid("s1^2 s2^3 s1^2 s2^2").unwrap();
        let w = contains_subword(&host, &host, SubwordOpts::none()).unwrap();
        assert!(!w.reversed);
        assert_eq!(w.rotation, 0);
        assert_eq!(w.shift, 0);
        assert!(w.verify(&host, &host));

        let host2 = parse_braid("s1 s2^5 s1 s2^4 s1").unwrap();
        let pat2 = parse_braid("s1 s2^5 s1 s2^4").unwrap();
        let w2 = contains_subword(&host2, &pat2, SubwordOpts::all()).unwrap();
        assert!(w2.verify(&host2, &pat2));

        let host3 = parse_braid("s2^2 s3^3 s2^2 s3^2").unwrap();
        let pat3 = parse_braid("s1^2 s2^3 s1^2 s2^2").unwrap();
        assert!(contains_subword(&host3, &pat3, SubwordOpts::none()).is_none());
        let w3 = contains_subword(&host3, &pat3, SubwordOpts::all()).unwrap();
        assert_eq!(w3.shift, 1);
        assert!(w3.verify(&host3, &pat3));
    }

    #[test]
    fn subword_merges_runs_across_deleted_letters() {
        // Deleting the middle s1 merges s2^2 s2^2 into s2^4.
        let host = parse_braid("s1 s2^2 s1 s2^2").unwrap();
        let pat = parse_braid("s1 s2^4").unwrap();
        let w = contains_subword(&host, &pat, SubwordOpts::none()).unwrap();
        assert!(w.verify(&host, &pat));
    }

    #[test]
    fn subword_witness_positions_increase() {
        let host = parse_braid("s1^3 s2 s1^2 s2^3").unwrap();
        let pat = parse_braid("s1^2 s2^2").unwrap();
        let w = contains_subword(&host, &pat, SubwordOpts::all()).unwrap();
        assert!(w.positions.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn lemma5_reduces_two_column_path() {
        // s1^2 s2 s1 s2 on 3 strands: the {1,2}-pattern is a path.
        let w = parse_braid("s1^2 s2 s1 s2").unwrap();
        let r = reduce_index_lemma5(&w).expect("reduction applies");
        assert_eq!(r.strands(), 2);
        assert_eq!(r.crossings(), w.crossings() - 1);
        let a = crate::seifert::invariants(&w).unwrap();
        let b = crate::seifert::invariants(&r).unwrap();
        assert_eq!(a.genus, b.genus);
        assert_eq!(a.signature, b.signature);
        assert!(a.alexander.equal_up_to_unit(&b.alexander));
    }

    #[test]
    fn lemma5_rejects_non_path() {
        // The two-column pattern of s1 s2^2 s1 s2^2 has a degree-3 vertex.
        let w = parse_braid("s1 s2^2 s1 s2^2").unwrap();
        assert!(reduce_index_lemma5(&w).is_none());
    }

    #[test]
    fn lemma5_case_requiring_reversal() {
        // Restricted to generators 2 and 3 this has a path pattern; the
        // normal shape is only reachable after reversing the word.
        let w = parse_braid("s1 s2^3 s1 s2 s3^2 s2 s3").unwrap();
        let r = reduce_index_lemma5(&w).expect("reduction applies");
        assert_eq!(r.strands(), 3);
        let a = crate::seifert::invariants(&w).unwrap();
        let b = crate::seifert::invariants(&r).unwrap();
        assert_eq!(a.genus, b.genus);
        assert_eq!(a.signature, b.signature);
        assert!(a.alexander.equal_up_to_unit(&b.alexander));
        assert_eq!(w.component_count(), r.component_count());
    }
}

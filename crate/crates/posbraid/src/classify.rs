//! Topological 4-genus classification of positive braid knots: the 4-genus
//! is maximal exactly at maximal signature, one below the genus when the
//! signature falls short by two, and bounded otherwise.

use serde::Serialize;
use serde_json::json;

use crate::braid::{parse_braid, BraidWord};
use crate::minors::{defect_certificate, DefectCertificate};
use crate::pattern::{split_connected_sum, Factor};
use crate::seifert::{invariants, G4};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    MaxSignature,
    SigmaGapOne,
    BoundsOnly,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::MaxSignature => "max_signature",
            Method::SigmaGapOne => "sigma_gap_one",
            Method::BoundsOnly => "bounds_only",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationResult {
    pub genus: usize,
    pub abs_sigma: u64,
    pub g4: G4,
    pub method: Method,
    pub certificate: Option<DefectCertificate>,
    pub torus_maximal: Option<String>,
}

impl ClassificationResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "g": self.genus,
            "abs_sigma": self.abs_sigma,
            "g4": self.g4,
            "method": self.method.as_str(),
            "certificate": self.certificate,
            "torus": self.torus_maximal,
        })
    }
}

/// Classifies the topological 4-genus of a positive braid knot.
///
/// `|sigma| = 2g` gives `g4 = g`; `|sigma| = 2g - 2` gives `g4 = g - 1`
/// (the genus is not realized, and the signature bound `2 g4 >= |sigma|`
/// closes the gap); otherwise `g4` lies in `[ceil(|sigma|/2), g - 1]`.
/// Connected sums are classified summand by summand and added.
pub fn classify_knot(w: &BraidWord) -> Result<ClassificationResult, Error> {
    if !w.is_knot() {
        return Err(Error::NotAKnot { components: w.component_count() });
    }
    let factors = split_connected_sum(w);
    let mut prime_words: Vec<BraidWord> = Vec::new();
    for f in factors {
        match f {
            Factor::Word(fw) => prime_words.push(fw),
            Factor::Unknot => {}
        }
    }
    if prime_words.is_empty() {
        // Unknot.
        return Ok(ClassificationResult {
            genus: 0,
            abs_sigma: 0,
            g4: G4::Exact { exact: 0 },
            method: Method::MaxSignature,
            certificate: None,
            torus_maximal: None,
        });
    }
    if prime_words.len() == 1 && prime_words[0] == *w {
        return classify_prime(w);
    }
    // Connected sum: genus and the 4-genus interval add.
    let parts: Vec<ClassificationResult> =
        prime_words.iter().map(classify_prime).collect::<Result<_, _>>()?;
    let genus = parts.iter().map(|p| p.genus).sum();
    let abs_sigma = parts.iter().map(|p| p.abs_sigma).sum();
    let lo = parts.iter().map(|p| p.g4.lower()).sum::<usize>();
    let hi = parts.iter().map(|p| p.g4.upper()).sum::<usize>();
    let g4 = if lo == hi { G4::Exact { exact: lo } } else { G4::Bounds { lo, hi } };
    let method = parts
        .iter()
        .map(|p| p.method)
        .max_by_key(|m| match m {
            Method::MaxSignature => 0,
            Method::SigmaGapOne => 1,
            Method::BoundsOnly => 2,
        })
        .unwrap();
    Ok(ClassificationResult {
        genus,
        abs_sigma,
        g4,
        method,
        certificate: parts.into_iter().find_map(|p| p.certificate),
        torus_maximal: None,
    })
}

fn classify_prime(w: &BraidWord) -> Result<ClassificationResult, Error> {
    let rec = invariants(w)?;
    let g = rec.genus;
    let sigma = rec.abs_signature as usize;
    debug_assert!(sigma <= 2 * g, "signature bounded by first Betti number for knots");
    if sigma == 2 * g {
        return Ok(ClassificationResult {
            genus: g,
            abs_sigma: rec.abs_signature,
            g4: G4::Exact { exact: g },
            method: Method::MaxSignature,
            certificate: None,
            torus_maximal: is_max_torus(w)?,
        });
    }
    let certificate = defect_certificate(w)?;
    let (g4, method) = if sigma == 2 * g - 2 {
        (G4::Exact { exact: g - 1 }, Method::SigmaGapOne)
    } else {
        (G4::Bounds { lo: sigma.div_ceil(2), hi: g - 1 }, Method::BoundsOnly)
    };
    Ok(ClassificationResult {
        genus: g,
        abs_sigma: rec.abs_signature,
        g4,
        method,
        certificate,
        torus_maximal: None,
    })
}

/// Recognizes the torus knots of maximal signature by fingerprint: the
/// genus, |signature| and normalized Alexander polynomial of the word are
/// compared against internally computed fingerprints of the candidates with
/// matching genus. Nothing is hardcoded.
pub fn is_max_torus(w: &BraidWord) -> Result<Option<String>, Error> {
    if !w.is_knot() {
        return Err(Error::NotAKnot { components: w.component_count() });
    }
    let rec = invariants(w)?;
    let mut candidates: Vec<(String, BraidWord)> = Vec::new();
    // T(2, n) with matching genus: n = 2g + 1.
    let n = 2 * rec.genus + 1;
    if n >= 3 {
        candidates.push((format!("T(2,{n})"), parse_braid(&format!("s1^{n}"))?));
    }
    candidates.push(("T(3,4)".into(), parse_braid("s1 s2 s1 s2 s1 s2 s1 s2")?));
    candidates.push(("T(3,5)".into(), parse_braid("s1 s2 s1 s2 s1 s2 s1 s2 s1 s2")?));
    for (name, word) in candidates {
        let cand = invariants(&word)?;
        if cand.genus == rec.genus
            && cand.abs_signature == rec.abs_signature
            && cand.alexander.equal_up_to_unit(&rec.alexander)
        {
            return Ok(Some(name));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str) -> BraidWord {
        parse_braid(text).unwrap()
    }

    #[test]
    fn classify_reference_knot() {
        let c = classify_knot(&word("s1^4 s2 s1^3 s2^2")).unwrap();
        assert_eq!(c.genus, 4);
        assert_eq!(c.abs_sigma, 6);
        assert_eq!(c.g4, G4::Exact { exact: 3 });
        assert_eq!(c.method, Method::SigmaGapOne);
        assert!(c.certificate.is_some());
        assert!(c.certificate.unwrap().verify());
    }

    #[test]
    fn classify_torus_knots() {
        let c = classify_knot(&word("s1^7")).unwrap();
        assert_eq!(c.g4, G4::Exact { exact: 3 });
        assert_eq!(c.method, Method::MaxSignature);
        assert_eq!(c.torus_maximal.as_deref(), Some("T(2,7)"));
        // T(5,6): bounds only, with g4 strictly below g = 10.
        let t56 = word("s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4");
        let c = classify_knot(&t56).unwrap();
        assert_eq!(c.genus, 10);
        assert_eq!(c.method, Method::BoundsOnly);
        assert!(c.g4.upper() == 9);
        assert!((c.abs_sigma as usize) < 2 * c.genus);
    }

    #[test]
    fn max_torus_recognition() {
        assert_eq!(is_max_torus(&word("s1^5")).unwrap().as_deref(), Some("T(2,5)"));
        assert_eq!(
            is_max_torus(&word("s1 s2 s1 s2 s1 s2 s1 s2")).unwrap().as_deref(),
            Some("T(3,4)")
        );
        assert_eq!(is_max_torus(&word("s1^4 s2 s1^3 s2^2")).unwrap(), None);
    }

    #[test]
    fn classify_connected_sum() {
        // Granny knot: trefoil # trefoil.
        let c = classify_knot(&word("s1^3 s2 s3^3")).unwrap();
        assert_eq!(c.genus, 2);
        assert_eq!(c.abs_sigma, 4);
        assert_eq!(c.g4, G4::Exact { exact: 2 });
        assert_eq!(c.method, Method::MaxSignature);
    }

    #[test]
    fn rejects_links() {
        assert!(matches!(classify_knot(&word("s1^2")), Err(Error::NotAKnot { components: 2 })));
    }

    #[test]
    fn bounds_respect_signature_floor() {
        let t56 = word("s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4");
        let c = classify_knot(&t56).unwrap();
        assert!(c.g4.lower() >= (c.abs_sigma as usize).div_ceil(2));
        assert!(c.g4.lower() <= c.g4.upper());
    }
}

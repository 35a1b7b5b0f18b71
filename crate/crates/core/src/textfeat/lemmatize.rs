//! Rule-plus-lexicon lemmatizer.
//!
//! Lookup order: the irregular table first, then ordered suffix rules
//! (plural endings, then -ing / -ed with undoubling and e-restoration).
//! Rules are applied to a fixed point, so the lemmatizer is idempotent by
//! construction: `lemmatize(lemmatize(t)) == lemmatize(t)` for every
//! token.

use super::lexicon::irregular_lemma;

/// Lemmatize one lowercase token.
pub fn lemmatize(token: &str) -> String {
    let mut current = token.to_string();
    loop {
        if let Some(mapped) = irregular_lemma(&current) {
            if mapped == current {
                return current;
            }
            current = mapped.to_string();
            continue;
        }
        let next = apply_first_rule(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Apply the first matching suffix rule, or return the word unchanged.
fn apply_first_rule(word: &str) -> String {
    let chars: Vec<char> = word.chars().collect();
    let n = chars.len();

    // -ies / -ied -> -y ("studies" -> "study", "carried" -> "carry")
    for suffix in ["ies", "ied"] {
        if word.ends_with(suffix) && n >= 5 {
            let mut out: String = chars[..n - 3].iter().collect();
            out.push('y');
            return out;
        }
    }

    // -eed -> -ee when the prefix has a vowel-consonant pattern
    // ("agreed" -> "agree", but "need" and "freed" stay)
    if word.ends_with("eed") && n >= 4 {
        let before = &chars[..n - 3];
        if measure(before) > 0 {
            return chars[..n - 1].iter().collect();
        }
        return word.to_string();
    }

    // plural clusters that drop -es ("churches", "boxes", "potatoes")
    for suffix in ["sses", "zzes", "ches", "shes", "xes", "oes"] {
        if word.ends_with(suffix) && n >= suffix.len() + 1 && n - 2 >= 2 {
            return chars[..n - 2].iter().collect();
        }
    }

    // plain plural -s ("dogs" -> "dog"); -ss, -us, -is endings are kept
    if word.ends_with('s')
        && n >= 3
        && !word.ends_with("ss")
        && !word.ends_with("us")
        && !word.ends_with("is")
    {
        return chars[..n - 1].iter().collect();
    }

    // -ing / -ed with undoubling and e-restoration
    for suffix in ["ing", "ed"] {
        if word.ends_with(suffix) && n >= suffix.len() + 2 {
            let stem = &chars[..n - suffix.len()];
            if has_vowel(stem) {
                return fix_stripped_stem(stem);
            }
        }
    }

    word.to_string()
}

/// Undouble a trailing consonant ("runn" -> "run", but "fall", "kiss",
/// "buzz" keep theirs) or restore a dropped final e on short
/// consonant-vowel-consonant stems ("mak" -> "make").
fn fix_stripped_stem(stem: &[char]) -> String {
    let n = stem.len();
    if n >= 2 && stem[n - 1] == stem[n - 2] && !is_vowel_at(stem, n - 1) {
        let last = stem[n - 1];
        if last != 'l' && last != 's' && last != 'z' {
            return stem[..n - 1].iter().collect();
        }
        return stem.iter().collect();
    }
    if measure(stem) == 1 && ends_cvc(stem) {
        let mut out: String = stem.iter().collect();
        out.push('e');
        return out;
    }
    stem.iter().collect()
}

/// Vowel test with the usual y-rule: y counts as a vowel when it follows
/// a consonant ("typ", "cry"), as a consonant otherwise ("play").
fn is_vowel_at(chars: &[char], i: usize) -> bool {
    match chars[i] {
        'a' | 'e' | 'i' | 'o' | 'u' => true,
        'y' => i > 0 && !is_vowel_at(chars, i - 1),
        _ => false,
    }
}

fn has_vowel(chars: &[char]) -> bool {
    (0..chars.len()).any(|i| is_vowel_at(chars, i))
}

/// Number of vowel-run to consonant-run transitions (the Porter measure).
fn measure(chars: &[char]) -> usize {
    let mut m = 0;
    let mut prev_vowel = false;
    for i in 0..chars.len() {
        let v = is_vowel_at(chars, i);
        if prev_vowel && !v {
            m += 1;
        }
        prev_vowel = v;
    }
    m
}

/// consonant-vowel-consonant ending where the final consonant is not
/// w, x or y.
fn ends_cvc(chars: &[char]) -> bool {
    let n = chars.len();
    if n < 3 {
        return false;
    }
    let last = chars[n - 1];
    !is_vowel_at(chars, n - 3)
        && is_vowel_at(chars, n - 2)
        && !is_vowel_at(chars, n - 1)
        && last != 'w'
        && last != 'x'
        && last != 'y'
}

#[cfg(test)]
mod tests {
    use super::super::lexicon::IRREGULAR_LEMMAS;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn suffix_rule_examples() {
        for (token, lemma) in [
            ("playing", "play"),
            ("played", "play"),
            ("plays", "play"),
            ("running", "run"),
            ("stopped", "stop"),
            ("making", "make"),
            ("baked", "bake"),
            ("studies", "study"),
            ("studied", "study"),
            ("carried", "carry"),
            ("churches", "church"),
            ("boxes", "box"),
            ("potatoes", "potato"),
            ("glasses", "glass"),
            ("dogs", "dog"),
            ("horses", "horse"),
            ("agreed", "agree"),
            ("need", "need"),
            ("falling", "fall"),
            ("kissing", "kiss"),
            ("eating", "eat"),
            ("typing", "type"),
            ("crying", "cry"),
            ("wanted", "want"),
        ] {
            assert_eq!(lemmatize(token), lemma, "token {token}");
        }
    }

    #[test]
    fn irregular_examples() {
        for (token, lemma) in [
            ("was", "be"),
            ("is", "be"),
            ("been", "be"),
            ("went", "go"),
            ("goes", "go"),
            ("children", "child"),
            ("men", "man"),
            ("took", "take"),
            ("using", "use"),
        ] {
            assert_eq!(lemmatize(token), lemma, "token {token}");
        }
    }

    #[test]
    fn no_rule_fires_on_base_forms() {
        for token in ["guitar", "man", "red", "bed", "king", "thing", "bus", "this"] {
            assert_eq!(lemmatize(token), token);
        }
    }

    #[test]
    fn inflection_family_maps_to_one_lemma() {
        for family in [
            ["care", "cares", "cared", "caring"],
            ["play", "plays", "played", "playing"],
            ["stop", "stops", "stopped", "stopping"],
            ["pass", "passes", "passed", "passing"],
        ] {
            let lemmas: Vec<String> = family.iter().map(|t| lemmatize(t)).collect();
            assert!(
                lemmas.windows(2).all(|w| w[0] == w[1]),
                "family {family:?} -> {lemmas:?}"
            );
        }
    }

    #[test]
    fn irregular_values_are_fixed_points() {
        for (_, value) in IRREGULAR_LEMMAS {
            assert_eq!(lemmatize(value), *value, "value {value}");
        }
    }

    proptest! {
        #[test]
        fn lemmatize_is_idempotent(token in "[a-z]{1,12}") {
            let once = lemmatize(&token);
            prop_assert_eq!(lemmatize(&once), once.clone());
        }

        #[test]
        fn lemmatize_never_panics_on_unicode(token in "\\PC{0,8}") {
            let lowered = token.to_lowercase();
            let once = lemmatize(&lowered);
            prop_assert_eq!(lemmatize(&once), once.clone());
        }
    }
}

//! Embedded lexicons: the 179-word English stopword list, an irregular
//! lemma table, and small verb/adjective lists for coarse POS classing.
//! All entries are lowercase. The lists are versioned here so feature
//! extraction is fully reproducible without external resources.

use std::collections::{HashMap, HashSet};
use std::sync::LazyLock;

/// Classic 179-word English stopword list. Entries containing an
/// apostrophe are kept for completeness even though the tokenizer never
/// produces them (it splits on non-alphanumerics).
pub const STOPWORDS: &[&str] = &[
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "you're", "you've",
    "you'll", "you'd", "your", "yours", "yourself", "yourselves", "he", "him", "his", "himself",
    "she", "she's", "her", "hers", "herself", "it", "it's", "its", "itself", "they", "them",
    "their", "theirs", "themselves", "what", "which", "who", "whom", "this", "that", "that'll",
    "these", "those", "am", "is", "are", "was", "were", "be", "been", "being", "have", "has",
    "had", "having", "do", "does", "did", "doing", "a", "an", "the", "and", "but", "if", "or",
    "because", "as", "until", "while", "of", "at", "by", "for", "with", "about", "against",
    "between", "into", "through", "during", "before", "after", "above", "below", "to", "from",
    "up", "down", "in", "out", "on", "off", "over", "under", "again", "further", "then", "once",
    "here", "there", "when", "where", "why", "how", "all", "any", "both", "each", "few", "more",
    "most", "other", "some", "such", "no", "nor", "not", "only", "own", "same", "so", "than",
    "too", "very", "s", "t", "can", "will", "just", "don", "don't", "should", "should've", "now",
    "d", "ll", "m", "o", "re", "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't", "didn",
    "didn't", "doesn", "doesn't", "hadn", "hadn't", "hasn", "hasn't", "haven", "haven't", "isn",
    "isn't", "ma", "mightn", "mightn't", "mustn", "mustn't", "needn", "needn't", "shan", "shan't",
    "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won", "won't", "wouldn",
    "wouldn't",
];

static STOPWORD_SET: LazyLock<HashSet<&'static str>> =
    LazyLock::new(|| STOPWORDS.iter().copied().collect());

pub fn is_stopword(token: &str) -> bool {
    STOPWORD_SET.contains(token)
}

/// Irregular form -> lemma. Checked before any suffix rule. Every value
/// must itself be a fixed point of the lemmatizer.
pub const IRREGULAR_LEMMAS: &[(&str, &str)] = &[
    // be / have / do
    ("am", "be"),
    ("is", "be"),
    ("are", "be"),
    ("was", "be"),
    ("were", "be"),
    ("been", "be"),
    ("being", "be"),
    ("has", "have"),
    ("had", "have"),
    ("having", "have"),
    ("does", "do"),
    ("did", "do"),
    ("done", "do"),
    ("doing", "do"),
    // common irregular verbs
    ("ate", "eat"),
    ("eaten", "eat"),
    ("became", "become"),
    ("began", "begin"),
    ("begun", "begin"),
    ("bit", "bite"),
    ("bitten", "bite"),
    ("blew", "blow"),
    ("blown", "blow"),
    ("bore", "bear"),
    ("born", "bear"),
    ("bought", "buy"),
    ("bound", "bind"),
    ("bred", "breed"),
    ("broke", "break"),
    ("broken", "break"),
    ("brought", "bring"),
    ("built", "build"),
    ("came", "come"),
    ("caught", "catch"),
    ("chose", "choose"),
    ("chosen", "choose"),
    ("crept", "creep"),
    ("dealt", "deal"),
    ("died", "die"),
    ("drank", "drink"),
    ("drawn", "draw"),
    ("dreamt", "dream"),
    ("drew", "draw"),
    ("driven", "drive"),
    ("drove", "drive"),
    ("drunk", "drink"),
    ("dug", "dig"),
    ("fed", "feed"),
    ("fell", "fall"),
    ("fallen", "fall"),
    ("felt", "feel"),
    ("fled", "flee"),
    ("flew", "fly"),
    ("flown", "fly"),
    ("forgave", "forgive"),
    ("forgiven", "forgive"),
    ("forgot", "forget"),
    ("forgotten", "forget"),
    ("fought", "fight"),
    ("found", "find"),
    ("froze", "freeze"),
    ("frozen", "freeze"),
    ("gave", "give"),
    ("given", "give"),
    ("gone", "go"),
    ("got", "get"),
    ("gotten", "get"),
    ("grew", "grow"),
    ("grown", "grow"),
    ("heard", "hear"),
    ("held", "hold"),
    ("hid", "hide"),
    ("hidden", "hide"),
    ("hung", "hang"),
    ("kept", "keep"),
    ("knew", "know"),
    ("known", "know"),
    ("laid", "lay"),
    ("lain", "lie"),
    ("lay", "lie"),
    ("led", "lead"),
    ("left", "leave"),
    ("lent", "lend"),
    ("lit", "light"),
    ("lost", "lose"),
    ("made", "make"),
    ("meant", "mean"),
    ("met", "meet"),
    ("paid", "pay"),
    ("ran", "run"),
    ("rang", "ring"),
    ("ridden", "ride"),
    ("risen", "rise"),
    ("rode", "ride"),
    ("rose", "rise"),
    ("rung", "ring"),
    ("said", "say"),
    ("sang", "sing"),
    ("sank", "sink"),
    ("sat", "sit"),
    ("saw", "see"),
    ("seen", "see"),
    ("sent", "send"),
    ("shaken", "shake"),
    ("shone", "shine"),
    ("shook", "shake"),
    ("shot", "shoot"),
    ("showed", "show"),
    ("shown", "show"),
    ("slept", "sleep"),
    ("slid", "slide"),
    ("sold", "sell"),
    ("sought", "seek"),
    ("spat", "spit"),
    ("sped", "speed"),
    ("spent", "spend"),
    ("spoke", "speak"),
    ("spoken", "speak"),
    ("sprang", "spring"),
    ("sprung", "spring"),
    ("stole", "steal"),
    ("stolen", "steal"),
    ("stood", "stand"),
    ("struck", "strike"),
    ("stuck", "stick"),
    ("stung", "sting"),
    ("sung", "sing"),
    ("sunk", "sink"),
    ("swam", "swim"),
    ("swept", "sweep"),
    ("swore", "swear"),
    ("sworn", "swear"),
    ("swum", "swim"),
    ("swung", "swing"),
    ("taken", "take"),
    ("taught", "teach"),
    ("threw", "throw"),
    ("thrown", "throw"),
    ("thought", "think"),
    ("tied", "tie"),
    ("told", "tell"),
    ("took", "take"),
    ("tore", "tear"),
    ("torn", "tear"),
    ("understood", "understand"),
    ("used", "use"),
    ("went", "go"),
    ("wept", "weep"),
    ("woke", "wake"),
    ("woken", "wake"),
    ("won", "win"),
    ("wore", "wear"),
    ("worn", "wear"),
    ("wound", "wind"),
    ("wove", "weave"),
    ("woven", "weave"),
    ("wrote", "write"),
    ("written", "write"),
    // irregular plurals
    ("calves", "calf"),
    ("children", "child"),
    ("elves", "elf"),
    ("feet", "foot"),
    ("geese", "goose"),
    ("halves", "half"),
    ("knives", "knife"),
    ("leaves", "leaf"),
    ("lives", "life"),
    ("loaves", "loaf"),
    ("men", "man"),
    ("mice", "mouse"),
    ("oxen", "ox"),
    ("scarves", "scarf"),
    ("shelves", "shelf"),
    ("teeth", "tooth"),
    ("thieves", "thief"),
    ("wives", "wife"),
    ("wolves", "wolf"),
    ("women", "woman"),
    // fixed points the suffix rules would otherwise mangle
    ("always", "always"),
    ("anything", "anything"),
    ("during", "during"),
    ("evening", "evening"),
    ("everything", "everything"),
    ("gas", "gas"),
    ("hundred", "hundred"),
    ("indeed", "indeed"),
    ("morning", "morning"),
    ("news", "news"),
    ("nothing", "nothing"),
    ("ourselves", "ourselves"),
    ("perhaps", "perhaps"),
    ("series", "series"),
    ("something", "something"),
    ("species", "species"),
    ("speed", "speed"),
    ("spring", "spring"),
    ("string", "string"),
    ("themselves", "themselves"),
    ("yes", "yes"),
    ("yourselves", "yourselves"),
];

static IRREGULAR_MAP: LazyLock<HashMap<&'static str, &'static str>> =
    LazyLock::new(|| IRREGULAR_LEMMAS.iter().copied().collect());

pub fn irregular_lemma(token: &str) -> Option<&'static str> {
    IRREGULAR_MAP.get(token).copied()
}

/// Common verb base forms for POS classing. Looked up for the token and
/// for its lemma, so inflected forms resolve through here too.
pub const COMMON_VERBS: &[&str] = &[
    "add", "allow", "appear", "ask", "bake", "be", "beat", "become", "begin", "believe", "bite",
    "blow", "break", "bring", "build", "buy", "call", "carry", "catch", "change", "chase",
    "choose", "clean", "climb", "come", "consider", "continue", "cook", "create", "cross", "cry",
    "cut", "dance", "decide", "die", "dig", "do", "draw", "dream", "drink", "drive", "drop",
    "eat", "enjoy", "expect", "explain", "fall", "feed", "feel", "fight", "find", "finish",
    "fix", "fly", "follow", "forget", "get", "give", "go", "grow", "hang", "happen", "have",
    "hear", "help", "hide", "hit", "hold", "hop", "hope", "include", "jump", "keep", "kick",
    "kill", "kiss", "know", "laugh", "lead", "lean", "learn", "leave", "lie", "lift", "light",
    "listen", "live", "look", "lose", "love", "make", "mean", "meet", "mix", "move", "need",
    "offer", "open", "paint", "pay", "peel", "perform", "pick", "place", "play", "point",
    "pour", "practice", "prepare", "provide", "pull", "push", "put", "reach", "read", "remain",
    "remember", "ride", "ring", "rise", "run", "say", "see", "seem", "sell", "send", "serve",
    "set", "shake", "shoot", "show", "sing", "sink", "sit", "slice", "smile", "speak", "spend",
    "stand", "start", "stay", "stir", "stop", "swim", "take", "talk", "teach", "tell", "think",
    "throw", "touch", "train", "travel", "try", "turn", "understand", "use", "wait", "walk",
    "want", "wash", "watch", "wave", "wear", "win", "work", "write",
];

/// Common adjectives for POS classing.
pub const COMMON_ADJECTIVES: &[&str] = &[
    "able", "angry", "bad", "beautiful", "best", "better", "big", "black", "blue", "bright",
    "brown", "busy", "clean", "cold", "cool", "dangerous", "dark", "deep", "different", "dirty",
    "dry", "early", "easy", "empty", "fast", "fat", "fine", "first", "free", "fresh", "full",
    "funny", "good", "gray", "great", "green", "happy", "hard", "heavy", "high", "hot", "huge",
    "important", "large", "last", "late", "light", "little", "long", "loud", "low", "narrow",
    "near", "new", "nice", "old", "orange", "pink", "poor", "public", "purple", "quick",
    "quiet", "red", "rich", "right", "sad", "safe", "shallow", "sharp", "short", "sick",
    "slow", "small", "soft", "strong", "tall", "thick", "thin", "tiny", "ugly", "warm", "weak",
    "wet", "white", "wide", "wild", "wrong", "yellow", "young",
];

static VERB_SET: LazyLock<HashSet<&'static str>> =
    LazyLock::new(|| COMMON_VERBS.iter().copied().collect());

static ADJECTIVE_SET: LazyLock<HashSet<&'static str>> =
    LazyLock::new(|| COMMON_ADJECTIVES.iter().copied().collect());

pub fn in_verb_lexicon(token: &str) -> bool {
    VERB_SET.contains(token)
}

pub fn in_adjective_lexicon(token: &str) -> bool {
    ADJECTIVE_SET.contains(token)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stopword_list_has_179_distinct_entries() {
        assert_eq!(STOPWORDS.len(), 179);
        let set: HashSet<_> = STOPWORDS.iter().collect();
        assert_eq!(set.len(), 179);
    }

    #[test]
    fn stopwords_are_lowercase() {
        for w in STOPWORDS {
            assert_eq!(**w, w.to_lowercase());
        }
    }

    #[test]
    fn irregular_table_has_no_duplicate_keys() {
        let keys: HashSet<_> = IRREGULAR_LEMMAS.iter().map(|(k, _)| k).collect();
        assert_eq!(keys.len(), IRREGULAR_LEMMAS.len());
    }
}

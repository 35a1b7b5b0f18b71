//! Parsing and validation of the STS Benchmark TSV distribution, label
//! scaling between the [0, 5] and [0, 1] framings, and the per-source
//! dataset breakdown.

use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dataset split identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Dev,
    Test,
}

impl Split {
    pub const ALL: [Split; 3] = [Split::Train, Split::Dev, Split::Test];

    pub fn as_str(self) -> &'static str {
        match self {
            Split::Train => "train",
            Split::Dev => "dev",
            Split::Test => "test",
        }
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Split {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "train" => Ok(Split::Train),
            "dev" => Ok(Split::Dev),
            "test" => Ok(Split::Test),
            other => Err(Error::validation(format!("unknown split '{other}'"))),
        }
    }
}

/// Target range for [`scale_labels`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelRange {
    /// Labels in [0, 1].
    Unit,
    /// Labels in [0, 5].
    Five,
}

impl LabelRange {
    pub fn bounds(self) -> (f64, f64) {
        match self {
            LabelRange::Unit => (0.0, 1.0),
            LabelRange::Five => (0.0, 5.0),
        }
    }
}

/// One sentence pair with its similarity label and source metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledExample {
    /// Split-local index, 0-based, assigned by record order.
    pub id: usize,
    pub genre: String,
    pub source_file: String,
    pub year: String,
    /// Similarity in [0, 5] (or [0, 1] after scaling).
    pub label: f64,
    pub sentence_a: String,
    pub sentence_b: String,
}

/// The three STSB splits in file order.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Corpus {
    pub train: Vec<LabeledExample>,
    pub dev: Vec<LabeledExample>,
    pub test: Vec<LabeledExample>,
}

impl Corpus {
    pub fn split(&self, split: Split) -> &[LabeledExample] {
        match split {
            Split::Train => &self.train,
            Split::Dev => &self.dev,
            Split::Test => &self.test,
        }
    }

    /// (train, dev, test) sizes.
    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.train.len(), self.dev.len(), self.test.len())
    }

    pub fn from_paths(train: &Path, dev: &Path, test: &Path) -> Result<Self> {
        let load = |path: &Path, split: Split| -> Result<Vec<LabeledExample>> {
            let file = std::fs::File::open(path).map_err(|e| {
                Error::validation(format!("cannot open {} file {}: {e}", split, path.display()))
            })?;
            parse_stsb_tsv(std::io::BufReader::new(file), split)
        };
        Ok(Corpus {
            train: load(train, Split::Train)?,
            dev: load(dev, Split::Dev)?,
            test: load(test, Split::Test)?,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Parse one split of the STSB distribution.
///
/// Each non-empty line must carry at least seven tab-separated fields:
/// genre, file, year, index, score, sentence1, sentence2. Fields past the
/// seventh (license columns in some distributions) are dropped. Lines are
/// split on tab only; no quoting is interpreted.
pub fn parse_stsb_tsv<R: BufRead>(reader: R, _split: Split) -> Result<Vec<LabeledExample>> {
    let mut examples = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 7 {
            return Err(Error::parse(
                lineno,
                format!("expected at least 7 tab-separated fields, found {}", fields.len()),
            ));
        }
        let label: f64 = fields[4].trim().parse().map_err(|_| {
            Error::validation(format!(
                "line {lineno}: score '{}' is not a decimal number",
                fields[4]
            ))
        })?;
        if !label.is_finite() || !(0.0..=5.0).contains(&label) {
            return Err(Error::validation(format!(
                "line {lineno}: score {label} outside [0, 5]"
            )));
        }
        let sentence_a = fields[5].to_string();
        let sentence_b = fields[6].to_string();
        if sentence_a.trim().is_empty() || sentence_b.trim().is_empty() {
            return Err(Error::validation(format!(
                "line {lineno}: empty sentence"
            )));
        }
        examples.push(LabeledExample {
            id: examples.len(),
            genre: fields[0].to_string(),
            source_file: fields[1].to_string(),
            year: fields[2].to_string(),
            label,
            sentence_a,
            sentence_b,
        });
    }
    Ok(examples)
}

/// Serialize examples back into the seven-column TSV layout.
///
/// Labels are written in shortest round-trip form, so parsing the output
/// again reproduces the examples exactly.
pub fn examples_to_tsv(examples: &[LabeledExample]) -> String {
    let mut out = String::new();
    for ex in examples {
        out.push_str(&format!(
            "{}\t{}\t{}\t{:04}\t{}\t{}\t{}\n",
            ex.genre, ex.source_file, ex.year, ex.id, ex.label, ex.sentence_a, ex.sentence_b
        ));
    }
    out
}

/// Affine label rescaling between the two framings.
///
/// `Unit` divides [0, 5] labels by 5; `Five` multiplies [0, 1] labels by
/// 5. A label outside the source range is a validation error.
pub fn scale_labels(examples: &[LabeledExample], target: LabelRange) -> Result<Vec<LabeledExample>> {
    let (source_lo, source_hi) = match target {
        LabelRange::Unit => (0.0, 5.0),
        LabelRange::Five => (0.0, 1.0),
    };
    examples
        .iter()
        .map(|ex| {
            if !(source_lo..=source_hi).contains(&ex.label) {
                return Err(Error::validation(format!(
                    "example {}: label {} outside source range [{source_lo}, {source_hi}]",
                    ex.id, ex.label
                )));
            }
            let label = match target {
                LabelRange::Unit => ex.label / 5.0,
                LabelRange::Five => ex.label * 5.0,
            };
            Ok(LabeledExample {
                label,
                ..ex.clone()
            })
        })
        .collect()
}

/// Per-(genre, file) example counts for each split, keyed the way the
/// published breakdown prints them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BreakdownTable {
    /// (genre, source_file) -> [train, dev, test] counts.
    pub cells: BTreeMap<(String, String), [usize; 3]>,
}

impl BreakdownTable {
    pub fn count(&self, genre: &str, source_file: &str, split: Split) -> usize {
        self.cells
            .get(&(genre.to_string(), source_file.to_string()))
            .map(|c| c[split_index(split)])
            .unwrap_or(0)
    }

    /// Sum over all cells for one split.
    pub fn split_total(&self, split: Split) -> usize {
        self.cells.values().map(|c| c[split_index(split)]).sum()
    }

    /// CSV rendering with header `genre,file,train,dev,test`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("genre,file,train,dev,test\n");
        for ((genre, file), counts) in &self.cells {
            out.push_str(&format!(
                "{genre},{file},{},{},{}\n",
                counts[0], counts[1], counts[2]
            ));
        }
        out
    }
}

fn split_index(split: Split) -> usize {
    match split {
        Split::Train => 0,
        Split::Dev => 1,
        Split::Test => 2,
    }
}

/// The raw files tag genres as `main-news`, `main-captions`, `main-forum`
/// or `main-forums`; the published breakdown uses the bare genre with the
/// singular `forum`.
fn display_genre(raw: &str) -> String {
    let stripped = raw.strip_prefix("main-").unwrap_or(raw);
    if stripped == "forums" {
        "forum".to_string()
    } else {
        stripped.to_string()
    }
}

/// Count examples per (genre, source file) and split.
///
/// The counts partition each split exactly: summing any split's column
/// reproduces that split's size.
pub fn source_breakdown(corpus: &Corpus) -> BreakdownTable {
    let mut table = BreakdownTable::default();
    for split in Split::ALL {
        for ex in corpus.split(split) {
            let key = (display_genre(&ex.genre), ex.source_file.clone());
            table.cells.entry(key).or_insert([0; 3])[split_index(split)] += 1;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const FIRST_TRAIN_LINE: &str = "main-captions\tMSRvid\t2012test\t0001\t5.000\tA plane is taking off.\tAn air plane is taking off.";

    fn parse_str(text: &str) -> Result<Vec<LabeledExample>> {
        parse_stsb_tsv(text.as_bytes(), Split::Train)
    }

    #[test]
    fn parses_official_first_record() {
        let examples = parse_str(FIRST_TRAIN_LINE).unwrap();
        assert_eq!(examples.len(), 1);
        let ex = &examples[0];
        assert_eq!(ex.id, 0);
        assert_eq!(ex.genre, "main-captions");
        assert_eq!(ex.source_file, "MSRvid");
        assert_eq!(ex.label, 5.0);
        assert_eq!(ex.sentence_a, "A plane is taking off.");
    }

    #[test]
    fn empty_input_is_empty_list() {
        assert!(parse_str("").unwrap().is_empty());
    }

    #[test]
    fn short_line_names_line_number() {
        let text = format!("{FIRST_TRAIN_LINE}\na\tb\tc\td\te\tf");
        let err = parse_str(&text).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn extra_fields_are_dropped() {
        let text = format!("{FIRST_TRAIN_LINE}\tlicense-x\textra");
        let examples = parse_str(&text).unwrap();
        assert_eq!(examples[0].sentence_b, "An air plane is taking off.");
    }

    #[test]
    fn score_out_of_range_rejected() {
        let bad = FIRST_TRAIN_LINE.replace("5.000", "5.001");
        assert!(matches!(parse_str(&bad), Err(Error::Validation(_))));
        let nan = FIRST_TRAIN_LINE.replace("5.000", "abc");
        assert!(matches!(parse_str(&nan), Err(Error::Validation(_))));
    }

    #[test]
    fn ids_follow_record_order() {
        let text = format!("{FIRST_TRAIN_LINE}\n\n{FIRST_TRAIN_LINE}");
        let examples = parse_str(&text).unwrap();
        assert_eq!(examples.iter().map(|e| e.id).collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn tsv_round_trip_is_identity() {
        let text = format!(
            "{FIRST_TRAIN_LINE}\nmain-news\theadlines\t2013\t0002\t2.347\tMarkets fall.\tStocks drop sharply."
        );
        let first = parse_str(&text).unwrap();
        let second = parse_str(&examples_to_tsv(&first)).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn scale_labels_endpoints_and_midpoint() {
        let mut examples = parse_str(FIRST_TRAIN_LINE).unwrap();
        examples[0].label = 5.0;
        assert_eq!(scale_labels(&examples, LabelRange::Unit).unwrap()[0].label, 1.0);
        examples[0].label = 0.0;
        assert_eq!(scale_labels(&examples, LabelRange::Unit).unwrap()[0].label, 0.0);
        examples[0].label = 2.5;
        assert_eq!(scale_labels(&examples, LabelRange::Unit).unwrap()[0].label, 0.5);
    }

    #[test]
    fn scale_labels_round_trip() {
        let mut examples = Vec::new();
        for i in 0..=500 {
            let mut ex = parse_str(FIRST_TRAIN_LINE).unwrap().remove(0);
            ex.id = i;
            ex.label = i as f64 / 100.0;
            examples.push(ex);
        }
        let down = scale_labels(&examples, LabelRange::Unit).unwrap();
        let back = scale_labels(&down, LabelRange::Five).unwrap();
        for (a, b) in examples.iter().zip(&back) {
            assert_relative_eq!(a.label, b.label, epsilon = 1e-15);
        }
    }

    #[test]
    fn scale_labels_rejects_out_of_source_range() {
        let mut examples = parse_str(FIRST_TRAIN_LINE).unwrap();
        examples[0].label = 2.5;
        assert!(scale_labels(&examples, LabelRange::Five).is_err());
    }

    #[test]
    fn breakdown_partitions_splits() {
        let train = "main-news\tMSRpar\t2012\t0\t1.0\ta b\tc d\nmain-captions\tMSRvid\t2012\t1\t2.0\te f\tg h";
        let dev = "main-forums\tanswers-forums\t2015\t0\t3.0\ti j\tk l";
        let corpus = Corpus {
            train: parse_str(train).unwrap(),
            dev: parse_stsb_tsv(dev.as_bytes(), Split::Dev).unwrap(),
            test: Vec::new(),
        };
        let table = source_breakdown(&corpus);
        assert_eq!(table.count("news", "MSRpar", Split::Train), 1);
        assert_eq!(table.count("captions", "MSRvid", Split::Train), 1);
        assert_eq!(table.count("forum", "answers-forums", Split::Dev), 1);
        assert_eq!(table.split_total(Split::Train), corpus.train.len());
        assert_eq!(table.split_total(Split::Dev), corpus.dev.len());
        assert_eq!(table.split_total(Split::Test), 0);

        let empty = source_breakdown(&Corpus::default());
        assert!(empty.cells.is_empty());
    }

    #[test]
    fn corpus_json_round_trip() {
        let corpus = Corpus {
            train: parse_str(FIRST_TRAIN_LINE).unwrap(),
            dev: Vec::new(),
            test: Vec::new(),
        };
        let json = corpus.to_json().unwrap();
        let back = Corpus::from_json(&json).unwrap();
        assert_eq!(back.train, corpus.train);
    }
}

use avoided_words::avoided::{self, Params};
use avoided_words::fasta_io::{
    read_fasta, read_fasta_path, write_fasta, write_report, AlphabetMode, AmbiguousMode, InputPolicy, ReportOptions,
};
use avoided_words::{Alphabet, Sequence};
use proptest::prelude::*;

fn record() -> impl Strategy<Value = Sequence> {
    ("[A-Za-z0-9_.|]{1,12}", "[ACGT]{1,200}")
        .prop_map(|(id, data)| Sequence::new(id, data.into_bytes(), Alphabet::dna()).unwrap())
}

proptest! {
    #[test]
    fn written_fasta_reads_back(records in prop::collection::vec(record(), 1..5)) {
        let mut buf = Vec::new();
        write_fasta(&records, &mut buf).unwrap();
        let policy = InputPolicy { alphabet: AlphabetMode::Dna, ambiguous: AmbiguousMode::Reject };
        prop_assert_eq!(read_fasta(buf.as_slice(), &policy).unwrap(), records);
    }
}

fn report(seqs: &[Sequence], options: &ReportOptions) -> Vec<u8> {
    let params = Params::new(3, -0.4).unwrap();
    let results: Vec<_> = seqs
        .iter()
        .map(|s| (s.id().to_string(), avoided::avoided_words_in(s, &params).unwrap()))
        .collect();
    let mut out = Vec::new();
    write_report(&results, &mut out, options).unwrap();
    out
}

#[test]
fn golden_example_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.fa");
    std::fs::write(&path, ">x\nAGCGCGACGTCTGTGT\n").unwrap();
    let seqs = read_fasta_path(&path, &InputPolicy::default()).unwrap();
    let out = String::from_utf8(report(&seqs, &ReportOptions::default())).unwrap();
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "# word\tlength\tclass\tf\tE\tstd");
    assert_eq!(rows[1], ">x");
    let agt = rows
        .iter()
        .position(|r| *r == "AGT\t3\tabsent\t0\t0.500000\t-0.500000")
        .unwrap();
    let cgt = rows
        .iter()
        .position(|r| *r == "CGT\t3\toccurring\t1\t1.500000\t-0.408248")
        .unwrap();
    assert!(agt < cgt);
}

#[test]
fn report_is_deterministic() {
    let seqs = vec![
        avoided_words::bench::generate(3000, 4, 1).unwrap(),
        avoided_words::bench::generate(500, 2, 2).unwrap(),
    ];
    let options = ReportOptions {
        precision: 9,
        mark_palindromes: false,
    };
    assert_eq!(report(&seqs, &options), report(&seqs, &options));
}

#[test]
fn palindrome_column() {
    let seqs = vec![Sequence::new("p", &b"GAATTCGAATTCAAAAAAGGATCC"[..], Alphabet::dna()).unwrap()];
    let out = String::from_utf8(report(
        &seqs,
        &ReportOptions {
            precision: 6,
            mark_palindromes: true,
        },
    ))
    .unwrap();
    assert!(out.starts_with("# word\tlength\tclass\tf\tE\tstd\tpalindrome\n"));
    for row in out.lines().skip(2) {
        let fields: Vec<&str> = row.split('\t').collect();
        assert_eq!(fields.len(), 7);
        assert!(fields[6] == "yes" || fields[6] == "no");
    }
}

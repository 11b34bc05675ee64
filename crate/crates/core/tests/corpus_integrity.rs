use sha2::Digest;

#[test]
fn embedded_corpus_matches_frozen_checksum() {
    let input = finetope_core::fixtures::corpus_digest_input();
    let mut h = sha2::Sha256::new();
    h.update(input.as_bytes());
    let got = format!("{:x}", h.finalize());
    assert_eq!(
        got,
        finetope_core::fixtures::CORPUS_SHA256.trim(),
        "embedded fixture data changed; update corpus.sha256 only after re-verifying the tables"
    );
}

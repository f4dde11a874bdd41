use dpcodes_core::verify::{min_distance, sampled_min_distance};
use dpcodes_core::{
    parse_operator, read_code, write_code, AnyCode, BinaryWord, Code, CodeMeta, D3Construction,
    D5Construction, FieldElement, FieldSpec, TernaryWord, Word,
};
use proptest::prelude::*;
use std::sync::OnceLock;

fn m3_code() -> &'static (D3Construction, Code<TernaryWord>) {
    static CODE: OnceLock<(D3Construction, Code<TernaryWord>)> = OnceLock::new();
    CODE.get_or_init(|| {
        let field = FieldSpec::default_for(3).unwrap();
        let c = D3Construction::new(parse_operator("matrix3", field).unwrap()).unwrap();
        let code = c.materialize().unwrap();
        (c, code)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tau_maps_the_code_onto_itself(bits in 0u64..256) {
        let (c, code) = m3_code();
        let z = BinaryWord::new(8, if bits.count_ones() % 2 == 1 { bits ^ 0x80 } else { bits });
        let tau = c.tau(&z).unwrap();
        for w in code.words() {
            prop_assert!(code.contains(&tau.apply_ternary(w)));
        }
        prop_assert_eq!(
            tau.apply_ternary(&c.codeword_covering(&BinaryWord::zero(8)).unwrap()),
            c.codeword_covering(&z).unwrap()
        );
    }

    #[test]
    fn d5_any_syndrome_has_distance_at_least_five(beta in 0u32..8, lit in prop_oneof![Just("pow:3"), Just("inv"), Just("pow:5")]) {
        let field = FieldSpec::default_for(3).unwrap();
        let c = D5Construction::with_syndrome(parse_operator(lit, field).unwrap(), FieldElement(beta)).unwrap();
        let code = c.materialize().unwrap();
        prop_assert_eq!(code.len(), 16);
        prop_assert!(min_distance(code.words()).unwrap().0 >= 5);
        for w in code.words() {
            prop_assert!(c.contains(w));
        }
    }

    #[test]
    fn sampling_never_beats_the_exact_minimum(seed: u64) {
        let (_, code) = m3_code();
        let words = code.words();
        let exact = min_distance(words).unwrap().0;
        let s = sampled_min_distance(|rng| {
            use rand::Rng;
            words[rng.gen_range(0..words.len())]
        }, 200, seed);
        prop_assert!(s.observed_min >= exact);
        let (a, b) = s.witness.unwrap();
        prop_assert_eq!(a.distance(&b), s.observed_min);
    }

    #[test]
    fn code_files_round_trip(picks in proptest::collection::btree_set(0usize..128, 1..40)) {
        let (_, code) = m3_code();
        let words: Vec<TernaryWord> = picks.iter().map(|&i| code.words()[i]).collect();
        let sub = Code::new(8, words, code.meta().clone(), 3, picks.len() as u128).unwrap();
        let back = read_code(&write_code(&sub)).unwrap();
        let AnyCode::Ternary(back) = back else { panic!("alphabet") };
        prop_assert_eq!(back.words(), sub.words());
        prop_assert_eq!(back.meta().field, sub.meta().field);
    }

    #[test]
    fn binary_files_round_trip(ws in proptest::collection::btree_set(0u64..1 << 12, 1..30)) {
        let words: Vec<BinaryWord> = ws.iter().map(|&b| BinaryWord::new(12, b)).collect();
        let code = Code::new(12, words, CodeMeta::default(), 1, ws.len() as u128).unwrap();
        prop_assert_eq!(read_code(&write_code(&code)).unwrap(), AnyCode::Binary(code));
    }
}

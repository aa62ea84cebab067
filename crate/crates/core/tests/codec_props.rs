mod common;

use common::validated_structures;
use gicc_core::codec::{
    code_length, encode_counted, format_messages, parse_messages, xor_cost_bound, z_mask,
};
use gicc_core::{encode, round_trip, symbolic_decode_check, MessageVector, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn masks_carry_the_xor_of_their_messages() {
    let pool = validated_structures(200, 21);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for trial in 0..1000 {
        let g = &pool[trial % pool.len()];
        let t = rng.gen_range(1..=70);
        let m = MessageVector::random(g.n(), t, rng.gen());
        let (code, ops) = encode_counted(g, &m).unwrap();
        assert_eq!(code.rate(), g.n() - g.k() + 1);
        assert_eq!(code.rate(), code_length(g));
        assert!(ops <= xor_cost_bound(g, t));
        assert_eq!(code.symbols[0].mask, *g.inner());
        for s in &code.symbols {
            assert_eq!(s.payload, m.xor_over(&s.mask));
        }
    }
}

#[test]
fn encoding_is_linear() {
    for (idx, g) in validated_structures(60, 3).iter().enumerate() {
        for t in [1, 8, 13] {
            let a = MessageVector::random(g.n(), t, idx as u64);
            let b = MessageVector::random(g.n(), t, 1000 + idx as u64);
            let sum = encode(g, &a.xor(&b)).unwrap();
            assert_eq!(sum, encode(g, &a).unwrap().xor(&encode(g, &b).unwrap()));
            let zero = encode(g, &MessageVector::zeros(g.n(), t)).unwrap();
            assert!(zero.symbols.iter().all(|s| s.payload.is_zero()));
        }
    }
}

#[test]
fn z_masks_telescope() {
    for g in validated_structures(200, 8) {
        let d = g.digraph();
        let inner = g.inner();
        for i in inner.iter() {
            let out = d.out_neighbors(i).unwrap();
            let missing: VertexSet = inner
                .iter()
                .filter(|&q| q != i && !out.contains(q))
                .collect();
            let expected = out.difference(inner).symmetric_difference(&missing);
            assert_eq!(z_mask(&g, i), expected, "inner vertex {i}");
        }
    }
}

#[test]
fn every_receiver_decodes() {
    for (idx, g) in validated_structures(200, 4).iter().enumerate() {
        assert!(symbolic_decode_check(g));
        if g.n() <= 6 {
            for v in 0..1u64 << g.n() {
                assert!(round_trip(g, &MessageVector::from_index_t1(g.n(), v)));
            }
        } else {
            for t in [1, 8, 64] {
                for s in 0..5 {
                    assert!(round_trip(g, &MessageVector::random(g.n(), t, (idx * 10 + s) as u64)));
                }
            }
        }
    }
}

#[test]
fn message_files_round_trip() {
    for t in [1, 7, 8, 9, 64, 65] {
        let m = MessageVector::random(5, t, t as u64);
        let text = format_messages(&m);
        assert_eq!(parse_messages(&text).unwrap(), m);
    }
}

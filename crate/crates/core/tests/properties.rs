use c2m_core::equiv::{check_state_equiv, check_value_equiv, differential_run, MemoryInjection, Status};
use c2m_core::externs::ExternTable;
use c2m_core::msvl::{emit, parse_msvl};
use c2m_core::msvl_interp::{self, MsvlRun, Verdict};
use c2m_core::translate::{translate, KEY_VARS};
use c2m_core::types::{Chunk, IntTy};
use c2m_core::value::{self, BinOp, Ptr, Value};
use c2m_core::xdc::frontend;
use c2m_core::xdc_interp::Memory;
use c2m_core::{synth, xdc_interp};
use proptest::prelude::*;

fn msvl(src: &str) -> MsvlRun {
    let p = parse_msvl(src).unwrap_or_else(|e| panic!("{src}: {e:?}"));
    msvl_interp::run_program(&p, &ExternTable::default(), &msvl_interp::Config::default())
}

fn ints(r: &MsvlRun) -> Vec<(String, Value)> {
    r.snapshot.as_ref().unwrap_or_else(|| panic!("{}", r.verdict)).flatten()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjunct_order_does_not_matter(a in -100i64..100, b in -100i64..100, c in -100i64..100) {
        let decl = "int x <== 0, y <== 0, z <== 0 and skip; ";
        let one = msvl(&format!("{decl}x := {a} and y := {b} and z := x + {c}"));
        let two = msvl(&format!("{decl}z := x + {c} and y := {b} and x := {a}"));
        prop_assert_eq!(&one.verdict, &two.verdict);
        prop_assert_eq!(ints(&one), ints(&two));
    }

    #[test]
    fn while_equals_its_unrolling(start in -3i64..6, n in -2i64..8, step in 1i64..3) {
        let decl = format!("int x <== {start}, k <== 0 and skip; ");
        let body = format!("x := x + {step} and k := k + 1");
        let w = format!("while(x < {n}){{{body}}}");
        let plain = msvl(&format!("{decl}{w}"));
        let unrolled = msvl(&format!("{decl}if(x < {n})then{{{body}; {w}}}else{{empty}}"));
        prop_assert_eq!(&plain.verdict, &unrolled.verdict);
        prop_assert_eq!(ints(&plain), ints(&unrolled));
    }

    #[test]
    fn store_then_load_round_trips(v in any::<i32>(), off in 0i64..5, which in 0usize..5) {
        let (chunk, want) = [
            (Chunk::I8S, v as i8 as i64),
            (Chunk::I8U, v as u8 as i64),
            (Chunk::I16S, v as i16 as i64),
            (Chunk::I16U, v as u16 as i64),
            (Chunk::I32, v as i64),
        ][which];
        let mut m = Memory::default();
        let b = m.alloc(8);
        let p = Ptr::new(b, off);
        m.store(chunk, p, &Value::Int(v as i64, IntTy::I32)).unwrap();
        prop_assert_eq!(m.load(chunk, p).unwrap().as_int(), Some(want));
        let d = f64::from(v) / 8.0;
        m.store(Chunk::F64, Ptr::new(b, 0), &Value::F64(d)).unwrap();
        prop_assert_eq!(m.load(Chunk::F64, Ptr::new(b, 0)).unwrap(), Value::F64(d));
    }

    #[test]
    fn out_of_bounds_access_is_an_error(off in 5i64..40) {
        let mut m = Memory::default();
        let b = m.alloc(8);
        prop_assert!(m.store(Chunk::I32, Ptr::new(b, off), &Value::int(1)).is_err());
        prop_assert!(m.load(Chunk::I32, Ptr::new(b, -off)).is_err());
    }

    #[test]
    fn pointer_offsets_stay_equivalent(
        b in 1u32..20, t in 1u32..20, delta in 0i64..128, i in 0i64..512, j in -64i64..64, e in 0usize..4
    ) {
        let mut alpha = MemoryInjection::default();
        alpha.insert(b, t, delta).unwrap();
        let esz = [1u32, 2, 4, 8][e];
        let x = Value::Ptr(Ptr::new(b, i));
        let m = Value::Ptr(Ptr::new(t, i + delta));
        prop_assert!(check_value_equiv(&alpha, &x, &m));
        let jv = Value::int(j);
        let x2 = value::binop(BinOp::Add, &x, Some(esz), &jv, None).unwrap();
        let m2 = value::binop(BinOp::Add, &jv, None, &m, Some(esz)).unwrap();
        prop_assert!(check_value_equiv(&alpha, &x2, &m2));
        let other = Value::Ptr(Ptr::new(t, i + delta + 1));
        prop_assert!(!check_value_equiv(&alpha, &x, &other));
    }

    #[test]
    fn injections_never_share_targets(pairs in prop::collection::vec((1u32..12, 1u32..12, 0i64..8), 0..24)) {
        let mut alpha = MemoryInjection::default();
        for (b, t, d) in pairs {
            let before = alpha.clone();
            let clash = alpha.pairs().iter().any(|&(b2, t2, d2)| (b2 == b) != (t2 == t) || (b2 == b && d2 != d));
            let r = alpha.insert(b, t, d);
            prop_assert_eq!(r.is_err(), clash);
            if r.is_err() {
                prop_assert_eq!(&alpha, &before);
            }
            prop_assert!(alpha.is_injective());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Control variables exist only in the MSVL state, so rewriting them
    /// never changes the state comparison.
    #[test]
    fn control_variables_are_excluded(seed in any::<u64>(), noise in prop::collection::vec(any::<i32>(), 5)) {
        let c = frontend(&synth::program(30, seed)).unwrap();
        let r = differential_run(&c, &ExternTable::default(), xdc_interp::DEFAULT_FUEL);
        prop_assert_eq!(r.verdict.status, Status::Equivalent);
        let mut alpha = MemoryInjection::default();
        for (b, t, d) in &r.verdict.alpha {
            alpha.insert(*b, *t, *d).unwrap();
        }
        let x = r.xdc.snapshot.clone().unwrap();
        let mut m = r.msvl.snapshot.clone().unwrap();
        prop_assert!(KEY_VARS.iter().any(|k| m.roots.contains_key(*k)));
        for (name, v) in KEY_VARS.iter().zip(&noise) {
            if let Some(root) = m.roots.get_mut(*name) {
                for leaf in &mut root.leaves {
                    leaf.value = Value::int(i64::from(*v));
                }
            }
        }
        prop_assert_eq!(check_state_equiv(&alpha, &x, &m, &r.translation).status, Status::Equivalent);
    }

    #[test]
    fn emitted_msvl_reparses_to_the_same_text(seed in any::<u64>()) {
        let c = frontend(&synth::program(25, seed)).unwrap();
        let text = emit(&translate(&c).program);
        let back = parse_msvl(&text).unwrap_or_else(|e| panic!("{e:?}\n{text}"));
        prop_assert_eq!(emit(&back), text);
    }

    #[test]
    fn reparsed_translation_runs_the_same(seed in any::<u64>()) {
        let c = frontend(&synth::program(20, seed)).unwrap();
        let p = translate(&c).program;
        let cfg = msvl_interp::Config::default();
        let direct = msvl_interp::run_program(&p, &ExternTable::default(), &cfg);
        let back = parse_msvl(&emit(&p)).unwrap();
        let again = msvl_interp::run_program(&back, &ExternTable::default(), &cfg);
        prop_assert!(matches!(direct.verdict, Verdict::Terminates(_)));
        prop_assert_eq!(direct.verdict, again.verdict);
        prop_assert_eq!(direct.snapshot, again.snapshot);
    }
}

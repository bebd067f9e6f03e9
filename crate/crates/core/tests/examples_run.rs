macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }

        #[test]
        fn $name() {
            $name::run_example().expect("example runs");
        }
    };
}

example!(homology_twists);
example!(embedding_involutions);
example!(lantern);
example!(pair_swaps);
example!(coverage_words);
example!(word_search);
example!(symmetric_group);
example!(finite_quotient);
example!(branch_table);
example!(certificate);

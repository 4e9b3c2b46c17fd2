#pragma once

// Hot element-wise loops get an AVX2 clone picked at load time. Results match
// the baseline clone since contraction is disabled for the whole library
// (-fno-trapping-math is what lets the compiler if-convert the neuron loop).
#if defined(__GNUC__) && defined(__x86_64__) && !defined(__clang__) && defined(__linux__)
#define NEUROFORAGE_CLONES __attribute__((target_clones("avx2", "default")))
#else
#define NEUROFORAGE_CLONES
#endif

#pragma once

#include "kmd/selftest.hpp"

namespace kmd::selftest {

void suite_primes(Recorder&, const Options&);
void suite_factorize(Recorder&, const Options&);
void suite_legendre(Recorder&, const Options&);
void suite_lifting(Recorder&, const Options&);
void suite_two_adic(Recorder&, const Options&);
void suite_crt(Recorder&, const Options&);
void suite_kummer(Recorder&, const Options&);

void suite_expansion(Recorder&, const Options&);
void suite_periodic(Recorder&, const Options&);
void suite_early_exit(Recorder&, const Options&);
void suite_terminating(Recorder&, const Options&);
void suite_engines(Recorder&, const Options&);
void suite_korobov(Recorder&, const Options&);
void suite_reduction(Recorder&, const Options&);

void suite_obstruction(Recorder&, const Options&);
void suite_cutoff_forms(Recorder&, const Options&);
void suite_korobov_constant(Recorder&, const Options&);

void suite_alpha(Recorder&, const Options&);
void suite_beta(Recorder&, const Options&);
void suite_gamma(Recorder&, const Options&);
void suite_fib2adic(Recorder&, const Options&);
void suite_tails(Recorder&, const Options&);
void suite_families(Recorder&, const Options&);
void suite_nonexamples(Recorder&, const Options&);

void suite_goldens(Recorder&, const Options&);
void suite_parallel(Recorder&, const Options&);

}  // namespace kmd::selftest

#pragma once

#include <random>
#include <vector>

#include "xmodkit/extension.hpp"
#include "xmodkit/prolongation.hpp"

/// Small named crossed modules, kernels and pre-prolongations used by the
/// tests, the example manifests and the documentation.
namespace xmodkit::fixtures {

/// id: Z/2 -> Z/2, conjugation action
CrossedModule xm_id();
/// zero map Z/2 -> Z/2, trivial action
CrossedModule xm_zero();
/// Z/4 -> Z/4, d(b) = 2b, trivial action
CrossedModule xm_cyc4();
/// Z/4 -> Z/4, d(b) = 2b, odd x acting by inversion
CrossedModule xm_cyc4_tau();

/// Raw θ table for Z/4 -> Z/4, d(b) = 2b with θ_2 = inversion; breaks C1 at b = 1.
std::vector<std::vector<Elem>> cyc4_theta_broken_c1();
/// Raw θ table for the zero map Z/4 -> Z/4 with θ_1 = θ_2 = inversion;
/// not an action, failing at (1, 1).
std::vector<std::vector<Elem>> zero4_theta_not_action();

/// (XM-ID, A = 1, ζ = 0)
AbstractZetaKernel kernel_id();
/// (XM-ZERO, A = Z/2, ζ = id)
AbstractZetaKernel kernel_zero();
/// (XM-CYC4, A = Z/2, ζ: {0,2} ≅ Z/2)
AbstractZetaKernel kernel_cyc4();
/// (XM-CYC4τ, A = Z/2, ζ: {0,2} ≅ Z/2)
AbstractZetaKernel kernel_cyc4_tau();

/// B = Z/4, π = mod 2, A = Z/2, η: Z/2 -> Z/4 onto {0,2}, θ trivial.
PreProlongation pre_pos();
/// pre_pos with odd x acting by inversion.
PreProlongation pre_neg();
/// pre_pos with A = 1, so B̄ = Z/2 and d = η.
PreProlongation pre_trivial();

/// A random valid crossed module with |B|, |D| <= 8, drawn from several
/// families (normal inclusions with conjugation, modules with d = 0,
/// central extensions, products of these).
CrossedModule random_crossed_module(std::mt19937_64& rng);

}  // namespace xmodkit::fixtures

// Walks through the main library calls: free cursor propagation, speed laws,
// a clocked Grover register and a three-excitation clock.

#include <qwclock/qwclock.hpp>

#include <cstdio>
#include <memory>

using namespace qwclock;

int main() {
    const ChainSpec spec(129);

    // Cursor started at site 1: the mean position grows at the mean speed 8/(3 pi).
    const auto start = CursorWavefunction::basis_state(spec, 1);
    const auto law = law_localized();
    std::printf("localized law: mean %.6f, variance %.6f\n", law.mean(), law.variance());
    for (double t : {10.0, 30.0, 50.0}) {
        const auto stats = position_statistics(propagate(start, t));
        std::printf("  t=%4.0f  E(Q)=%8.4f  E(V)t=%8.4f\n", t, stats.mean, law.mean() * t);
    }

    // Spreading the cursor over a launch pad raises the mean speed towards 1.
    for (int n : {1, 3, 5, 10}) {
        const auto pad = law_pad_cn(n);
        std::printf("flat pad n=%2d: mean speed %.6f, variance %.6f\n", n, pad.mean(), pad.variance());
    }

    // Grover toy program: every link applies the same rotation to the register.
    const auto g = grover_params(7);
    auto program = std::make_shared<const PrimitiveProgram>(PrimitiveProgram::toy(spec.sites(), g.alpha));
    const MachineEvolver machine(MachineState::product(program, initial_register(g), start));
    for (double t : {0.0, 10.5, 29.1}) {
        const Matrix2c rho = machine.at(t).register_density();
        const auto b = bloch(rho);
        std::printf("register t=%5.1f  P(target)=%.4f  r=%.4f  S=%.4f\n", t, success_probability(rho), b.norm(),
                    entropy(rho));
    }

    // Three excitations pass a single Grover link; the register ends near three iterations.
    const ChainSpec short_chain(20);
    const auto g4 = grover_params(4);
    const SingleLinkEvolver swarm(SectorState::product(short_chain, initial_register(g4), OccupationSet::leftmost(3, 20)), 6,
                                  rotation(g4.alpha));
    const auto late = swarm.at(29.8);
    const auto counts = count_past_link_distribution(late, 6);
    std::printf("three excitations at t=29.8: P(target)=%.4f, P(all passed)=%.4f\n",
                success_probability(late.register_density()), counts[3]);
    return 0;
}

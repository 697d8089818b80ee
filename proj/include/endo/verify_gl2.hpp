#pragma once

#include "endo/endodata.hpp"
#include "endo/lifting.hpp"

#include <string>
#include <vector>

namespace endo {

// Fault-injection switches for the mutation tests of the GL_2 pipeline.
struct Gl2Options {
    int pairing_sign = 1;          // -1 flips the pairing convention
    bool inject_offdiagonal = false; // plant a spurious microlocal entry
};

struct Gl2Report {
    bool orbits_ok = false;      // 3 + 3 orbits with dimensions (0, 0, 1)
    bool pairing_ok = false;     // <eta_G, P(xi_k)> = (1,0,0) = H-side vector
    bool eta_H_ok = false;       // eta_psi_H(sigma) = (1_{PGL(2,R)}, 1)
    bool packets_ok = false;     // A-packets are the two trivial-rep singletons
    std::vector<std::string> log;

    OrbitTable table_G, table_H;
    TwistedVirtualCharacter eta_G, eta_H;
    LiftReport lift;
    std::vector<std::string> packet_G, packet_H;

    bool ok() const { return orbits_ok && pairing_ok && eta_H_ok && packets_ok; }
};

// Reproduces the twisted endoscopic lifting computation for GL_2 with the
// unipotent A-parameter: orbit tables on both sides, the eta characters, the
// pairing vectors and the A-packets.
Gl2Report run_gl2_verification(const Gl2Options &opt = {});

} // namespace endo

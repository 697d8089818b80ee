#pragma once

#include "endo/endodata.hpp"
#include "endo/lifting.hpp"
#include "endo/torus.hpp"

#include <json.hpp>

namespace endo {

using Json = nlohmann::ordered_json;

// Every top-level document carries the schema version and the convention
// constants in force (they are the visible surface of normalization choices).
Json document_header();

Json to_json(const BigInt &v);
Json to_json(const Rational &v);
Json to_json(const RatVec &v);
Json to_json(const IntMat &m);
Json to_json(const RatMat &m);
Json to_json(const AbelianQuotientDescriptor &d);
Json to_json(const Clan &c);
Json to_json(const OrbitTable &t);
OrbitTable orbit_table_from_json(const Json &j);
Json to_json(const TwistedEndoDatum &d);
Json to_json(const RootOfUnity &z);
Json to_json(const TwistedVirtualCharacter &c, const OrbitTable &table);
Json to_json(const LiftReport &r);
Json to_json(const EquivarianceReport &r);
Json to_json(const MicrolocalTable &mic);
Json to_json(const ChiMatrix &chi);

IntMat int_mat_from_json(const Json &j);
RatMat rat_mat_from_json(const Json &j);
RatVec rat_vec_from_json(const Json &j);

// Root data and automorphisms (External Interfaces of the root-datum module).
Json to_json(const BasedRootDatum &d);
Json to_json(const DatumAutomorphism &a);
BasedRootDatum based_root_datum_from_json(const Json &j);
DatumAutomorphism datum_automorphism_from_json(const Json &j);

// Torus data for the CLI.
Json to_json(const RealTorusDatum &t);
RealTorusDatum torus_from_json(const Json &j);

// Microlocal tables and chi matrices from disk (user-supplied rows carry
// their provenance strings).
MicrolocalTable microlocal_from_json(const Json &j);
ChiMatrix chi_from_json(const Json &j);

} // namespace endo

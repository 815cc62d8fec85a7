#pragma once

#include <string>

#include "mixcut/bench.hpp"
#include "mixcut/blp.hpp"
#include "mixcut/cut.hpp"
#include "mixcut/families.hpp"
#include "mixcut/hull.hpp"
#include "mixcut/instance.hpp"

namespace mixcut {

// JSON file formats. Every number that may be fractional travels as a
// string "a/b" or "a". Parse errors raise ValidationError.

MixingInstance instance_from_json(const std::string& text);
std::string instance_to_json(const MixingInstance& inst);

LinearCut cut_from_json(const std::string& text);
std::string cut_to_json(const LinearCut& cut);

std::string facet_set_to_json(const FacetSet& fs);

std::string certificate_to_json(const Certificate& cert);

// Parameter file for `mixcut generate`: an "instance" object plus the
// family parameters (r, t_set, delta, q_list, phi, s_list, A_sets, beta).
struct GenerateRequest {
  MixingInstance instance;
  Certificate params;
};
GenerateRequest generate_request_from_json(const std::string& text,
                                           Family family);

// {"instance": {...}} builds S_c; otherwise a full generic description.
struct BilinearInput {
  BilinearSet set;
  std::optional<MixingInstance> instance;
};
BilinearInput bilinear_set_from_json(const std::string& text);
BlpAssignment assignment_from_json(const std::string& text, const BilinearSet& S);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace mixcut

#pragma once

#include <filesystem>
#include <string>

#include "frecency/regression.hpp"
#include "frecency/url_classifier.hpp"

// JSON persistence for trained models.
namespace frecency {

std::string linear_model_to_json(const LinearModel& model);
// Throws Error(ModelFormat).
LinearModel linear_model_from_json(const std::string& text);

std::string mnb_model_to_json(const MnbModel& model);
// Throws Error(ModelFormat).
MnbModel mnb_model_from_json(const std::string& text);

// Throw Error(Io).
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace frecency

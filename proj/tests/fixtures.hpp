#pragma once

#include <string>

#include "bondage/io.hpp"

inline std::string fixture_path(const std::string& name) { return std::string(BONDAGE_FIXTURE_DIR) + "/" + name; }

inline bondage::GraphDocument fixture_doc(const std::string& name) {
    return bondage::parse_graph(bondage::read_text_file(fixture_path(name)));
}

inline bondage::Graph fixture(const std::string& name) { return fixture_doc(name).graph; }

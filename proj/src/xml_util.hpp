/*
Copyright 2026 The confassign Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <string>
#include <string_view>

#include <boost/property_tree/ptree.hpp>

namespace confassign::detail {

// Parses a document with Boost.PropertyTree. Named HTML entities that the
// public DBLP dump declares in its DTD (&uuml; and friends) are expanded to
// UTF-8 first. Throws Error(MalformedXml) on parse failure.
boost::property_tree::ptree parse_xml(std::string_view document);

std::string escape_xml(std::string_view text);

bool is_blank(std::string_view text);

}  // namespace confassign::detail

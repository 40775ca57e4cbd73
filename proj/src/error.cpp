/*
 * Copyright 2026 The roughring Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "roughring/error.hpp"

namespace roughring {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::IndexOutOfBounds: return "IndexOutOfBounds";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::RelationNotReflexive: return "RelationNotReflexive";
    case ErrorKind::RelationNotSymmetric: return "RelationNotSymmetric";
    case ErrorKind::RelationNotTransitive: return "RelationNotTransitive";
    case ErrorKind::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorKind::BadTableShape: return "BadTableShape";
    case ErrorKind::NotAbelianGroup: return "NotAbelianGroup";
    case ErrorKind::MulNotAssociative: return "MulNotAssociative";
    case ErrorKind::MulNotCommutative: return "MulNotCommutative";
    case ErrorKind::NoUnity: return "NoUnity";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorKind::EmptyOperand: return "EmptyOperand";
    case ErrorKind::UniverseTooLargeForExhaustive: return "UniverseTooLargeForExhaustive";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace roughring

// Copyright 2026 The ScriptSync Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "scriptsync/align/corpus.hpp"
#include "scriptsync/align/recover.hpp"
#include "scriptsync/align/sequence_matcher.hpp"
#include "scriptsync/cipher/cipher.hpp"
#include "scriptsync/core/episode_json.hpp"
#include "scriptsync/core/model.hpp"
#include "scriptsync/core/validate.hpp"
#include "scriptsync/eval/report.hpp"
#include "scriptsync/eval/word_errors.hpp"
#include "scriptsync/stats/distribution.hpp"
#include "scriptsync/stats/mtld.hpp"
#include "scriptsync/stats/network.hpp"
#include "scriptsync/stats/power_law.hpp"
#include "scriptsync/stats/scenes.hpp"
#include "scriptsync/stats/speakers.hpp"
#include "scriptsync/stats/tables.hpp"
#include "scriptsync/subtitle/segment.hpp"
#include "scriptsync/subtitle/srt.hpp"
#include "scriptsync/subtitle/tokenize.hpp"

# Copyright 2026 The rwspace Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import pathlib
import subprocess

import jsonschema
import pytest
import referencing


def pytest_addoption(parser):
    parser.addoption("--rwspace", required=True, help="path to the rwspace executable")
    parser.addoption("--schemas", required=True, help="directory holding *.schema.json")


@pytest.fixture(scope="session")
def rwspace_exe(pytestconfig):
    return pathlib.Path(pytestconfig.getoption("--rwspace"))


@pytest.fixture
def run(rwspace_exe):
    def _run(*args):
        return subprocess.run([str(rwspace_exe), *map(str, args)], capture_output=True, text=True,
                              timeout=120)
    return _run


@pytest.fixture(scope="session")
def validate(pytestconfig):
    root = pathlib.Path(pytestconfig.getoption("--schemas"))
    resources = []
    for path in sorted(root.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], referencing.Resource.from_contents(schema)))
    registry = referencing.Registry().with_resources(resources)

    def _validate(name, instance):
        schema = registry.contents(f"{name}.schema.json")
        jsonschema.Draft202012Validator(schema, registry=registry).validate(instance)
    return _validate


@pytest.fixture
def write_json(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return path
    return _write

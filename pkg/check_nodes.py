#!/usr/bin/env python3
"""
Debug script to check which spinlat commands are successfully loading.
Run this from the repository root.
"""

import sys
from pathlib import Path

# Add current directory to path
sys.path.insert(0, str(Path(__file__).parent))

EXPECTED_COMMANDS = 21

print("=" * 80)
print("SPINLAT COMMAND LOADING DEBUG")
print("=" * 80)

try:
    import nodes as spinlat_nodes
    print("✓ nodes package imported successfully\n")
except Exception as e:
    print(f"✗ Failed to import nodes: {e}\n")
    import traceback
    traceback.print_exc()
    sys.exit(1)

mappings = spinlat_nodes.NODE_CLASS_MAPPINGS
print(f"Total commands registered: {len(mappings)}")
print("\nRegistered commands by category:\n")

categories = {name: [] for name in ("Lattice", "Clifford", "Euler", "Orbital", "Suite")}
for command, node_class in sorted(mappings.items()):
    category = node_class.CATEGORY.split("/")[-1]
    categories.setdefault(category, []).append(command)

for category, commands in categories.items():
    print(f"  {category}: {len(commands)} commands")
    if commands:
        for command in commands:
            print(f"    ✓ {command}")
    else:
        print("    ✗ No commands loaded!")

print("\n" + "=" * 80)
if len(mappings) < EXPECTED_COMMANDS:
    print(f"⚠ WARNING: Expected {EXPECTED_COMMANDS} commands, but only {len(mappings)} loaded!")
    print("Common issues:")
    print("  1. Missing dependencies (numpy, sympy)")
    print("  2. Syntax errors in command files")
    print("  3. Import path issues")
else:
    print(f"✓ All {EXPECTED_COMMANDS} commands loaded successfully!")
print("=" * 80)

print("\nTesting direct imports:")
print("-" * 80)

test_nodes = [
    ('nodes.euler.ep_index_node', 'SpinlatEpIndex'),
    ('nodes.clifford.spin_square_node', 'SpinlatSpinSquare'),
    ('nodes.orbital.orbital_node', 'SpinlatOrbital'),
    ('nodes.selftest_node', 'SpinlatSelftest'),
]

for module_path, class_name in test_nodes:
    try:
        module = __import__(module_path, fromlist=[class_name])
        cls = getattr(module, class_name)
        print(f"✓ {class_name}: {cls.CATEGORY} ({cls.COMMAND})")
    except Exception as e:
        print(f"✗ {class_name}: {type(e).__name__}: {e}")

print("=" * 80)

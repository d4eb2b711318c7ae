# -*- coding: utf-8 -*-
"""`python -m pretzelslice analyze|census|selftest ...`"""

from pretzelslice.cli import main

main()

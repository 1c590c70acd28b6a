from setuptools import setup

setup(name='cotorsion-lab',
      version=0.1,
      description='Twin cotorsion pairs, their hearts and certificates for integrality and abelianness',
      packages=['cotorsion_lab', 'cotorsion_lab.repcore', 'cotorsion_lab.serialcat', 'cotorsion_lab.subcat',
                'cotorsion_lab.pairs', 'cotorsion_lab.heartcat', 'cotorsion_lab.cli', 'cotorsion_lab.manager',
                'cotorsion_lab.fixtures', 'cotorsion_lab_testing'],
      package_data={'cotorsion_lab.fixtures': ['*.json'], 'cotorsion_lab.cli': ['REPORT_SCHEMA.md']},
      include_package_data=True,
      scripts=['run_cotorsion_lab.py'],
      entry_points={'console_scripts': ['cotorsion-lab = cotorsion_lab.cli.main:main']},

      install_requires=['numpy', 'galois'],
      extras_require={'test': ['pytest', 'hypothesis']},
      )
